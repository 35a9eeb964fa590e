#include "hilbert/exponent.hpp"

#include <algorithm>
#include <ostream>
#include <string>

namespace hilbert {

ExponentVector::ExponentVector(std::initializer_list<int> coords) : ExponentVector(std::vector<int>(coords)) {}

ExponentVector::ExponentVector(std::vector<int> coords) : coords_(std::move(coords))
{
    for (int c : coords_)
        if (c < 0)
            throw PreconditionError("negative exponent " + std::to_string(c));
}

ExponentVector ExponentVector::unit(std::size_t n, std::size_t i)
{
    ExponentVector e(n);
    e.set(i, 1);
    return e;
}

void ExponentVector::set(std::size_t i, int value)
{
    if (value < 0)
        throw PreconditionError("negative exponent " + std::to_string(value));
    coords_[i] = value;
}

int ExponentVector::degree() const noexcept
{
    int d = 0;
    for (int c : coords_)
        d += c;
    return d;
}

ExponentVector ExponentVector::operator+(const ExponentVector& other) const
{
    requireSameDimension(*this, other);
    ExponentVector r = *this;
    for (std::size_t i = 0; i < size(); ++i)
        r.coords_[i] += other.coords_[i];
    return r;
}

ExponentVector ExponentVector::operator-(const ExponentVector& other) const
{
    requireSameDimension(*this, other);
    if (!leq(other, *this))
        throw PreconditionError("subtraction leaves N^n");
    ExponentVector r = *this;
    for (std::size_t i = 0; i < size(); ++i)
        r.coords_[i] -= other.coords_[i];
    return r;
}

std::ostream& operator<<(std::ostream& os, const ExponentVector& a)
{
    os << '(';
    for (std::size_t i = 0; i < a.size(); ++i)
        os << (i ? "," : "") << a[i];
    return os << ')';
}

std::size_t ExponentVectorHash::operator()(const ExponentVector& a) const noexcept
{
    std::size_t h = 0xcbf29ce484222325ull;
    for (int c : a) {
        h ^= static_cast<std::size_t>(c) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
}

void requireSameDimension(const ExponentVector& a, const ExponentVector& b)
{
    if (a.size() != b.size())
        throw DimensionMismatch(a.size(), b.size());
}

bool leq(const ExponentVector& a, const ExponentVector& b)
{
    requireSameDimension(a, b);
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

ExponentVector join(const ExponentVector& a, const ExponentVector& b)
{
    requireSameDimension(a, b);
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = std::max(a[i], b[i]);
    return ExponentVector(std::move(r));
}

ExponentVector meet(const ExponentVector& a, const ExponentVector& b)
{
    requireSameDimension(a, b);
    std::vector<int> r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = std::min(a[i], b[i]);
    return ExponentVector(std::move(r));
}

std::pair<ExponentVector, ExponentVector> joinMeet(const ExponentVector& a, const ExponentVector& b)
{
    return {join(a, b), meet(a, b)};
}

Interval::Interval(ExponentVector low, ExponentVector high) : low_(std::move(low)), high_(std::move(high))
{
    requireSameDimension(low_, high_);
    if (!leq(low_, high_))
        throw PreconditionError("interval endpoints are not ordered");
}

std::uint64_t Interval::pointCount() const noexcept
{
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < low_.size(); ++i)
        count *= static_cast<std::uint64_t>(high_[i] - low_[i] + 1);
    return count;
}

bool Interval::contains(const ExponentVector& c) const { return leq(low_, c) && leq(c, high_); }

bool Interval::intersects(const Interval& other) const
{
    // [a,b] and [c,d] meet iff a ∨ c ≼ b ∧ d.
    return leq(join(low_, other.low_), meet(high_, other.high_));
}

std::ostream& operator<<(std::ostream& os, const Interval& iv) { return os << '[' << iv.low() << ", " << iv.high() << ']'; }

VariableSet::VariableSet(std::size_t n, std::vector<int> members) : n_(n), members_(std::move(members))
{
    std::sort(members_.begin(), members_.end());
    if (std::adjacent_find(members_.begin(), members_.end()) != members_.end())
        throw PreconditionError("repeated variable index");
    for (int j : members_)
        if (j < 0 || static_cast<std::size_t>(j) >= n_)
            throw PreconditionError("variable index out of range: " + std::to_string(j));
}

bool VariableSet::contains(int j) const { return std::binary_search(members_.begin(), members_.end(), j); }

void requireValidBound(const ExponentVector& g)
{
    for (int c : g)
        if (c > kMaxBoundCoordinate)
            throw PreconditionError("degree bound coordinate " + std::to_string(c) + " exceeds 2^15");
}

namespace {

void requireBelowBound(const ExponentVector& a, const ExponentVector& g)
{
    requireSameDimension(a, g);
    if (!leq(a, g))
        throw PreconditionError("point is not below the degree bound");
}

} // namespace

int rho(const ExponentVector& a, const ExponentVector& g)
{
    requireBelowBound(a, g);
    int r = 0;
    for (std::size_t j = 0; j < a.size(); ++j)
        r += a[j] == g[j];
    return r;
}

VariableSet zSet(const ExponentVector& a, const ExponentVector& g)
{
    requireBelowBound(a, g);
    std::vector<int> members;
    for (std::size_t j = 0; j < a.size(); ++j)
        if (a[j] == g[j])
            members.push_back(static_cast<int>(j));
    return VariableSet(a.size(), std::move(members));
}

std::vector<ExponentVector> gSet(const Interval& iv, const ExponentVector& g)
{
    requireBelowBound(iv.high(), g);
    ExponentVector top = iv.high();
    for (std::size_t j = 0; j < top.size(); ++j)
        if (iv.high()[j] == g[j])
            top.set(j, iv.low()[j]);
    std::vector<ExponentVector> out;
    forEachPoint(iv.low(), top, [&](const ExponentVector& c) { out.push_back(c); });
    return out;
}

std::vector<Interval> splitInterval(const Interval& iv, const ExponentVector& b0, const ExponentVector& g)
{
    const ExponentVector& a = iv.low();
    const ExponentVector& b = iv.high();
    requireSameDimension(a, b0);
    requireBelowBound(b, g);
    if (!leq(a, b0) || !leq(b0, b))
        throw PreconditionError("split point lies outside the interval");

    std::vector<Interval> parts;
    parts.emplace_back(a, b0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (b0[i] == b[i])
            continue;
        ExponentVector lo = a;
        lo.set(i, b0[i] + 1);
        ExponentVector hi = b;
        for (std::size_t j = 0; j < i; ++j)
            hi.set(j, b0[j]);
        parts.emplace_back(std::move(lo), std::move(hi));
    }
    return parts;
}

} // namespace hilbert
