#include "hilbert/stanley.hpp"

#include <algorithm>

#include "cover_search.hpp"

namespace hilbert {

namespace {

ExponentVector quotientBound(const MonomialIdeal& numerator, const MonomialIdeal& denominator)
{
    ModuleExpr m(numerator.dimension());
    m.addQuotient(numerator, denominator, ExponentVector::zero(numerator.dimension()));
    return determineBound(m);
}

/// Rejects intervals whose induced spaces meet the annihilator.
class AnnihilatorGate final : public detail::CoverGate
{
  public:
    explicit AnnihilatorGate(const QuotientModule& q) : q_(q) {}

    bool accepts(const detail::Lattice& lattice, detail::Lattice::Index low,
                 detail::Lattice::Index high) const override
    {
        const Interval iv(lattice.point(low), lattice.point(high));
        const VariableSet z = zSet(iv.high(), q_.bound());
        for (const auto& c : gSet(iv, q_.bound()))
            if (annihilatorIntersects(c, z, q_))
                return false;
        return true;
    }

    bool boxInSupport(const detail::Lattice& lattice, detail::Lattice::Index low,
                      detail::Lattice::Index high) const override
    {
        // I is closed upwards and the complement of J downwards.
        return q_.numerator().contains(lattice.point(low)) && !q_.denominator().contains(lattice.point(high));
    }

  private:
    const QuotientModule& q_;
};

StanleyDecomposition toStanley(const HilbertPartition& pp, const ExponentVector& g)
{
    StanleyDecomposition d;
    d.spaces = renderDecomposition(pp, g).spaces;
    std::sort(d.spaces.begin(), d.spaces.end());
    return d;
}

} // namespace

QuotientModule::QuotientModule(MonomialIdeal numerator, MonomialIdeal denominator)
    : QuotientModule(numerator, denominator, quotientBound(numerator, denominator))
{
}

QuotientModule::QuotientModule(MonomialIdeal numerator, MonomialIdeal denominator, ExponentVector bound)
    : numerator_(std::move(numerator)), denominator_(std::move(denominator)), bound_(std::move(bound))
{
    ModuleExpr m(numerator_.dimension());
    m.addQuotient(numerator_, denominator_, ExponentVector::zero(numerator_.dimension()));
    series_ = seriesOf(m, bound_);
    if (!series_.isMultiplicityFree())
        throw PreconditionError("quotient series has a coefficient above 1");
}

std::optional<QuotientModule> QuotientModule::fromModule(const ModuleExpr& m)
{
    if (m.terms().size() != 1)
        return std::nullopt;
    const ExponentVector origin = ExponentVector::zero(m.dimension());
    if (const auto* f = std::get_if<FreeTerm>(&m.terms().front())) {
        if (f->shift != origin)
            return std::nullopt;
        return QuotientModule(MonomialIdeal::unit(m.dimension()), MonomialIdeal::zero(m.dimension()));
    }
    const auto& q = std::get<QuotientTerm>(m.terms().front());
    if (q.shift != origin)
        return std::nullopt;
    return QuotientModule(q.numerator, q.denominator);
}

bool QuotientModule::inSupport(const ExponentVector& c) const
{
    return leq(c, bound_) && numerator_.contains(c) && !denominator_.contains(c);
}

int StanleyDecomposition::depth(std::size_t n) const
{
    auto d = static_cast<int>(n);
    for (const auto& sp : spaces)
        d = std::min(d, static_cast<int>(sp.vars.size()));
    return d;
}

bool annihilatorIntersects(const ExponentVector& c, const VariableSet& z, const QuotientModule& q)
{
    if (!q.inSupport(c))
        throw PreconditionError("annihilator test on a monomial outside the module support");
    if (z.ambientDimension() != c.size())
        throw DimensionMismatch(z.ambientDimension(), c.size());
    // J is generated below its generator join, so pushing the z-coordinates of
    // c up to that join reaches J iff some multiple X^(c+u), u in K[z], does.
    const ExponentVector top = q.denominator().generatorJoin();
    ExponentVector saturated = c;
    for (int j : z) {
        const auto jj = static_cast<std::size_t>(j);
        saturated.set(jj, std::max(c[jj], top[jj]));
    }
    return q.denominator().contains(saturated);
}

std::optional<StanleyDecomposition> checkStanleyDepth(const QuotientModule& q, int s, const SearchConfig& cfg,
                                                      SearchStats* stats)
{
    SearchStats local;
    detail::Budget budget(cfg);
    AnnihilatorGate gate(q);
    detail::CoverSearch search(q.series(), s, cfg, budget, stats ? *stats : local, &gate);
    auto pp = search.run();
    if (!pp)
        return std::nullopt;
    return toStanley(*pp, q.bound());
}

StanleyDepthResult sdepth(const QuotientModule& q, const SearchConfig& cfg)
{
    AnnihilatorGate gate(q);
    DepthResult r = detail::runDepthDriver(q.dimension(), cfg,
                                           [&](int s, detail::Budget& budget, SearchStats& stats) {
                                               detail::CoverSearch search(q.series(), s, cfg, budget, stats, &gate);
                                               return search.run();
                                           });
    StanleyDepthResult out;
    out.value = r.value;
    out.certificate = toStanley(r.certificate, q.bound());
    out.partition = std::move(r.certificate);
    out.stats = r.stats;
    return out;
}

bool verifyStanleyDecomposition(const QuotientModule& q, const StanleyDecomposition& d)
{
    for (const auto& sp : d.spaces) {
        if (sp.shift.size() != q.dimension() || sp.vars.ambientDimension() != q.dimension())
            return false;
        if (!q.inSupport(sp.shift) || annihilatorIntersects(sp.shift, sp.vars, q))
            return false;
    }
    HilbertDecomposition h;
    h.spaces = d.spaces;
    // q's series is 0/1, so equality also rules out overlapping spaces.
    return seriesOf(h, q.bound()) == q.series();
}

} // namespace hilbert
