#ifndef HILBERT_EXPONENT_HPP
#define HILBERT_EXPONENT_HPP

// The lattice N^n under the componentwise order, intervals in it, and the
// statistics attached to a point relative to a degree bound g.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <utility>
#include <vector>

#include "hilbert/errors.hpp"

namespace hilbert {

/// Largest admissible coordinate of a degree bound.
inline constexpr int kMaxBoundCoordinate = 1 << 15;

/// A point of N^n: the exponent of a monomial X^a, or a multidegree.
class ExponentVector
{
  public:
    ExponentVector() = default;
    explicit ExponentVector(std::size_t n) : coords_(n, 0) {}
    ExponentVector(std::initializer_list<int> coords);
    explicit ExponentVector(std::vector<int> coords);

    static ExponentVector zero(std::size_t n) { return ExponentVector(n); }
    static ExponentVector unit(std::size_t n, std::size_t i);

    std::size_t size() const noexcept { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }
    void set(std::size_t i, int value);

    const std::vector<int>& coords() const noexcept { return coords_; }
    auto begin() const noexcept { return coords_.begin(); }
    auto end() const noexcept { return coords_.end(); }

    /// Sum of coordinates.
    int degree() const noexcept;

    ExponentVector operator+(const ExponentVector& other) const;
    ExponentVector operator-(const ExponentVector& other) const;

    // Lexicographic, first coordinate most significant.
    friend auto operator<=>(const ExponentVector&, const ExponentVector&) = default;
    friend bool operator==(const ExponentVector&, const ExponentVector&) = default;

  private:
    std::vector<int> coords_;
};

std::ostream& operator<<(std::ostream& os, const ExponentVector& a);

struct ExponentVectorHash
{
    std::size_t operator()(const ExponentVector& a) const noexcept;
};

void requireSameDimension(const ExponentVector& a, const ExponentVector& b);

/// a ≼ b componentwise.
bool leq(const ExponentVector& a, const ExponentVector& b);

/// (a ∨ b, a ∧ b): componentwise maximum and minimum.
std::pair<ExponentVector, ExponentVector> joinMeet(const ExponentVector& a, const ExponentVector& b);
ExponentVector join(const ExponentVector& a, const ExponentVector& b);
ExponentVector meet(const ExponentVector& a, const ExponentVector& b);

/// Closed box [low, high] of lattice points.
class Interval
{
  public:
    Interval(ExponentVector low, ExponentVector high);

    const ExponentVector& low() const noexcept { return low_; }
    const ExponentVector& high() const noexcept { return high_; }
    std::size_t dimension() const noexcept { return low_.size(); }

    /// Number of lattice points, prod (high_i - low_i + 1).
    std::uint64_t pointCount() const noexcept;
    bool contains(const ExponentVector& c) const;
    bool intersects(const Interval& other) const;

    friend auto operator<=>(const Interval&, const Interval&) = default;
    friend bool operator==(const Interval&, const Interval&) = default;

  private:
    ExponentVector low_;
    ExponentVector high_;
};

std::ostream& operator<<(std::ostream& os, const Interval& iv);

/// A set of variable indices, stored sorted and 0-based.
class VariableSet
{
  public:
    VariableSet() = default;
    VariableSet(std::size_t n, std::vector<int> members);

    std::size_t ambientDimension() const noexcept { return n_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool contains(int j) const;
    const std::vector<int>& members() const noexcept { return members_; }
    auto begin() const noexcept { return members_.begin(); }
    auto end() const noexcept { return members_.end(); }

    friend auto operator<=>(const VariableSet&, const VariableSet&) = default;
    friend bool operator==(const VariableSet&, const VariableSet&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<int> members_;
};

/// Checks that g is a usable degree bound (coordinates within kMaxBoundCoordinate).
void requireValidBound(const ExponentVector& g);

/// Number of coordinates where a meets the bound g.
int rho(const ExponentVector& a, const ExponentVector& g);

/// Indices j with a_j = g_j.
VariableSet zSet(const ExponentVector& a, const ExponentVector& g);

/// Points c of iv whose coordinates in Z_{iv.high} are pinned to iv.low.
/// Lexicographic ascending.
std::vector<ExponentVector> gSet(const Interval& iv, const ExponentVector& g);

/// Peels [a, b0] off iv = [a, b] and partitions the rest into boxes whose
/// high endpoints all lie above b0. The first returned interval is [a, b0].
std::vector<Interval> splitInterval(const Interval& iv, const ExponentVector& b0, const ExponentVector& g);

/// Visits every lattice point of [low, high] in lexicographic ascending order.
template <class Visitor>
void forEachPoint(const ExponentVector& low, const ExponentVector& high, Visitor&& visit)
{
    requireSameDimension(low, high);
    if (!leq(low, high))
        return;
    ExponentVector c = low;
    const std::size_t n = low.size();
    for (;;) {
        visit(static_cast<const ExponentVector&>(c));
        std::size_t i = n;
        while (i > 0) {
            --i;
            if (c[i] < high[i]) {
                c.set(i, c[i] + 1);
                break;
            }
            c.set(i, low[i]);
            if (i == 0)
                return;
        }
        if (n == 0)
            return;
    }
}

template <class Visitor>
void forEachPoint(const Interval& iv, Visitor&& visit)
{
    forEachPoint(iv.low(), iv.high(), std::forward<Visitor>(visit));
}

} // namespace hilbert

#endif
