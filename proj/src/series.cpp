#include "hilbert/series.hpp"

#include <algorithm>
#include <limits>
#include <ostream>
#include <sstream>

namespace hilbert {

TruncatedSeries::TruncatedSeries(ExponentVector bound) : bound_(std::move(bound)) { requireValidBound(bound_); }

void TruncatedSeries::requireInBox(const ExponentVector& a) const
{
    requireSameDimension(a, bound_);
    if (!leq(a, bound_))
        throw PreconditionError("exponent lies above the truncation bound");
}

TruncatedSeries::Coefficient TruncatedSeries::coefficient(const ExponentVector& a) const
{
    requireSameDimension(a, bound_);
    auto it = coeffs_.find(a);
    return it == coeffs_.end() ? 0 : it->second;
}

void TruncatedSeries::add(const ExponentVector& a, Coefficient c)
{
    requireInBox(a);
    if (c == 0)
        return;
    Coefficient& slot = coeffs_[a];
    if (slot > std::numeric_limits<Coefficient>::max() - c)
        throw std::overflow_error("coefficient overflow");
    slot += c;
}

void TruncatedSeries::set(const ExponentVector& a, Coefficient c)
{
    requireInBox(a);
    if (c == 0)
        coeffs_.erase(a);
    else
        coeffs_[a] = c;
}

TruncatedSeries::Coefficient TruncatedSeries::totalMass() const noexcept
{
    Coefficient total = 0;
    for (const auto& [a, c] : coeffs_)
        total += c;
    return total;
}

TruncatedSeries::Coefficient TruncatedSeries::maxCoefficient() const noexcept
{
    Coefficient m = 0;
    for (const auto& [a, c] : coeffs_)
        m = std::max(m, c);
    return m;
}

TruncatedSeries TruncatedSeries::restrictedTo(const ExponentVector& newBound) const
{
    requireSameDimension(newBound, bound_);
    if (!leq(newBound, bound_))
        throw PreconditionError("restriction bound exceeds the series bound");
    TruncatedSeries out(newBound);
    for (const auto& [a, c] : coeffs_)
        if (leq(a, newBound))
            out.coeffs_.emplace(a, c);
    return out;
}

TruncatedSeries& TruncatedSeries::operator+=(const TruncatedSeries& other)
{
    if (other.bound_ != bound_)
        throw PreconditionError("adding series with different bounds");
    for (const auto& [a, c] : other.coeffs_)
        add(a, c);
    return *this;
}

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& p)
{
    if (p.isZero())
        return os << '0';
    bool first = true;
    for (const auto& [a, c] : p.terms()) {
        os << (first ? "" : " + ") << c << "*X^" << a;
        first = false;
    }
    return os;
}

namespace {

std::string describe(const ExponentVector& a)
{
    std::ostringstream s;
    s << a;
    return s.str();
}

} // namespace

NegativityError::NegativityError(ExponentVector witness)
    : std::runtime_error("negative coefficient at " + describe(witness)), witness_(std::move(witness))
{
}

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators) : n_(n)
{
    for (const auto& e : generators)
        if (e.size() != n)
            throw DimensionMismatch(e.size(), n);
    std::sort(generators.begin(), generators.end());
    generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
    // Drop every generator divisible by another one.
    for (std::size_t i = 0; i < generators.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < generators.size() && !redundant; ++j)
            redundant = j != i && leq(generators[j], generators[i]);
        if (!redundant)
            gens_.push_back(generators[i]);
    }
}

MonomialIdeal MonomialIdeal::maximal(std::size_t n)
{
    std::vector<ExponentVector> gens;
    for (std::size_t i = 0; i < n; ++i)
        gens.push_back(ExponentVector::unit(n, i));
    return MonomialIdeal(n, std::move(gens));
}

bool MonomialIdeal::contains(const ExponentVector& u) const
{
    if (u.size() != n_)
        throw DimensionMismatch(u.size(), n_);
    return std::any_of(gens_.begin(), gens_.end(), [&](const ExponentVector& e) { return leq(e, u); });
}

bool MonomialIdeal::containsIdeal(const MonomialIdeal& other) const
{
    if (other.n_ != n_)
        throw DimensionMismatch(other.n_, n_);
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const ExponentVector& e) { return contains(e); });
}

ExponentVector MonomialIdeal::generatorJoin() const
{
    ExponentVector j = ExponentVector::zero(n_);
    for (const auto& e : gens_)
        j = join(j, e);
    return j;
}

ModuleExpr& ModuleExpr::add(ModuleTerm term)
{
    std::visit(
        [&](const auto& t) {
            using T = std::decay_t<decltype(t)>;
            if (t.shift.size() != n_)
                throw DimensionMismatch(t.shift.size(), n_);
            if constexpr (std::is_same_v<T, QuotientTerm>) {
                if (t.numerator.dimension() != n_)
                    throw DimensionMismatch(t.numerator.dimension(), n_);
                if (t.denominator.dimension() != n_)
                    throw DimensionMismatch(t.denominator.dimension(), n_);
                if (!t.numerator.containsIdeal(t.denominator))
                    throw PreconditionError("quotient denominator is not contained in the numerator");
            }
        },
        term);
    terms_.push_back(std::move(term));
    return *this;
}

ModuleExpr& ModuleExpr::addFree(ExponentVector shift, int multiplicity)
{
    for (int k = 0; k < multiplicity; ++k)
        add(FreeTerm{shift});
    return *this;
}

ModuleExpr& ModuleExpr::addQuotient(MonomialIdeal numerator, MonomialIdeal denominator, ExponentVector shift,
                                    int multiplicity)
{
    for (int k = 0; k < multiplicity; ++k)
        add(QuotientTerm{numerator, denominator, shift});
    return *this;
}

ModuleExpr& ModuleExpr::addIdeal(MonomialIdeal ideal, int multiplicity)
{
    const std::size_t n = ideal.dimension();
    return addQuotient(std::move(ideal), MonomialIdeal::zero(n), ExponentVector::zero(n), multiplicity);
}

void HilbertPartition::add(Interval iv)
{
    requireSameDimension(iv.high(), bound_);
    if (!leq(iv.high(), bound_))
        throw PreconditionError("partition part lies above the bound");
    parts_.push_back(std::move(iv));
}

void HilbertPartition::canonicalize() { std::sort(parts_.begin(), parts_.end()); }

int HilbertPartition::minRho() const
{
    int m = static_cast<int>(dimension());
    for (const auto& iv : parts_)
        m = std::min(m, rho(iv.high(), bound_));
    return m;
}

TruncatedSeries intervalPoly(const Interval& iv, const ExponentVector& bound)
{
    TruncatedSeries q(bound);
    requireSameDimension(iv.high(), bound);
    if (!leq(iv.high(), bound))
        throw PreconditionError("interval lies above the bound");
    forEachPoint(iv, [&](const ExponentVector& c) { q.add(c); });
    return q;
}

ExponentVector determineBound(const ModuleExpr& m)
{
    ExponentVector g = ExponentVector::zero(m.dimension());
    for (const auto& term : m.terms()) {
        std::visit(
            [&](const auto& t) {
                using T = std::decay_t<decltype(t)>;
                g = join(g, t.shift);
                if constexpr (std::is_same_v<T, QuotientTerm>) {
                    for (const auto& e : t.numerator.generators())
                        g = join(g, e + t.shift);
                    for (const auto& e : t.denominator.generators())
                        g = join(g, e + t.shift);
                }
            },
            term);
    }
    requireValidBound(g);
    return g;
}

TruncatedSeries seriesOf(const ModuleExpr& m, const ExponentVector& g)
{
    requireSameDimension(g, ExponentVector::zero(m.dimension()));
    if (!leq(determineBound(m), g))
        throw PreconditionError("bound is too small for the module");
    TruncatedSeries h(g);
    const ExponentVector origin = ExponentVector::zero(m.dimension());
    for (const auto& term : m.terms()) {
        if (const auto* f = std::get_if<FreeTerm>(&term)) {
            forEachPoint(f->shift, g, [&](const ExponentVector& a) { h.add(a); });
            continue;
        }
        const auto& q = std::get<QuotientTerm>(term);
        forEachPoint(q.shift, g, [&](const ExponentVector& a) {
            const ExponentVector u = a - q.shift;
            if (q.numerator.contains(u) && !q.denominator.contains(u))
                h.add(a);
        });
    }
    return h;
}

TruncatedSeries subtractChecked(const TruncatedSeries& p, const TruncatedSeries& q)
{
    if (p.bound() != q.bound())
        throw PreconditionError("subtracting series with different bounds");
    TruncatedSeries out = p;
    for (const auto& [a, c] : q.terms()) {
        const auto have = p.coefficient(a);
        if (have < c)
            throw NegativityError(a);
        out.set(a, have - c);
    }
    return out;
}

bool verifyPartition(const TruncatedSeries& h, const HilbertPartition& pp)
{
    if (h.bound() != pp.bound())
        return false;
    TruncatedSeries sum(pp.bound());
    for (const auto& iv : pp.parts())
        sum += intervalPoly(iv, pp.bound());
    return sum == h;
}

} // namespace hilbert
