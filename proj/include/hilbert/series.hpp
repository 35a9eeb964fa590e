#ifndef HILBERT_SERIES_HPP
#define HILBERT_SERIES_HPP

// Truncated multigraded Hilbert series and the module expressions they come from.

#include <cstdint>
#include <iosfwd>
#include <map>
#include <stdexcept>
#include <variant>
#include <vector>

#include "hilbert/exponent.hpp"

namespace hilbert {

/// Polynomial with nonnegative integer coefficients supported on [0, bound].
/// Zero coefficients are never stored.
class TruncatedSeries
{
  public:
    using Coefficient = std::uint64_t;
    using Terms = std::map<ExponentVector, Coefficient>;

    TruncatedSeries() = default;
    explicit TruncatedSeries(ExponentVector bound);

    std::size_t dimension() const noexcept { return bound_.size(); }
    const ExponentVector& bound() const noexcept { return bound_; }
    const Terms& terms() const noexcept { return coeffs_; }

    Coefficient coefficient(const ExponentVector& a) const;
    void add(const ExponentVector& a, Coefficient c = 1);
    void set(const ExponentVector& a, Coefficient c);

    bool isZero() const noexcept { return coeffs_.empty(); }
    std::size_t supportSize() const noexcept { return coeffs_.size(); }
    Coefficient totalMass() const noexcept;
    Coefficient maxCoefficient() const noexcept;

    /// Every coefficient is at most 1.
    bool isMultiplicityFree() const noexcept { return maxCoefficient() <= 1; }

    /// Keys ≼ newBound only; newBound must be ≼ bound().
    TruncatedSeries restrictedTo(const ExponentVector& newBound) const;

    TruncatedSeries& operator+=(const TruncatedSeries& other);
    friend TruncatedSeries operator+(TruncatedSeries lhs, const TruncatedSeries& rhs) { return lhs += rhs; }
    friend bool operator==(const TruncatedSeries&, const TruncatedSeries&) = default;

  private:
    void requireInBox(const ExponentVector& a) const;

    ExponentVector bound_;
    Terms coeffs_;
};

std::ostream& operator<<(std::ostream& os, const TruncatedSeries& p);

/// Raised by subtractChecked when the difference leaves N[X].
class NegativityError : public std::runtime_error
{
  public:
    explicit NegativityError(ExponentVector witness);
    const ExponentVector& witness() const noexcept { return witness_; }

  private:
    ExponentVector witness_;
};

/// Monomial ideal kept on a minimal set of generators.
class MonomialIdeal
{
  public:
    MonomialIdeal() = default;
    explicit MonomialIdeal(std::size_t n) : n_(n) {}
    MonomialIdeal(std::size_t n, std::vector<ExponentVector> generators);

    static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
    static MonomialIdeal unit(std::size_t n) { return MonomialIdeal(n, {ExponentVector::zero(n)}); }
    /// (X_1, ..., X_n)
    static MonomialIdeal maximal(std::size_t n);

    std::size_t dimension() const noexcept { return n_; }
    const std::vector<ExponentVector>& generators() const noexcept { return gens_; }
    bool isZero() const noexcept { return gens_.empty(); }

    /// X^u ∈ I, by divisibility against the minimal generators.
    bool contains(const ExponentVector& u) const;
    /// Every generator of other lies in this ideal.
    bool containsIdeal(const MonomialIdeal& other) const;
    /// Componentwise maximum of the generator exponents (zero vector for the zero ideal).
    ExponentVector generatorJoin() const;

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<ExponentVector> gens_;
};

/// R(-shift).
struct FreeTerm
{
    ExponentVector shift;
    friend bool operator==(const FreeTerm&, const FreeTerm&) = default;
};

/// (I/J)(-shift) with J ⊆ I.
struct QuotientTerm
{
    MonomialIdeal numerator;
    MonomialIdeal denominator;
    ExponentVector shift;
    friend bool operator==(const QuotientTerm&, const QuotientTerm&) = default;
};

using ModuleTerm = std::variant<FreeTerm, QuotientTerm>;

/// Formal direct sum of shifted free modules and shifted monomial quotients.
class ModuleExpr
{
  public:
    ModuleExpr() = default;
    explicit ModuleExpr(std::size_t n) : n_(n) {}

    std::size_t dimension() const noexcept { return n_; }
    const std::vector<ModuleTerm>& terms() const noexcept { return terms_; }

    ModuleExpr& addFree(ExponentVector shift, int multiplicity = 1);
    ModuleExpr& addQuotient(MonomialIdeal numerator, MonomialIdeal denominator, ExponentVector shift,
                            int multiplicity = 1);
    ModuleExpr& addIdeal(MonomialIdeal ideal, int multiplicity = 1);
    ModuleExpr& add(ModuleTerm term);

    friend bool operator==(const ModuleExpr&, const ModuleExpr&) = default;

  private:
    std::size_t n_ = 0;
    std::vector<ModuleTerm> terms_;
};

/// Multiset of intervals whose induced polynomials sum to a truncated series.
class HilbertPartition
{
  public:
    HilbertPartition() = default;
    explicit HilbertPartition(ExponentVector bound) : bound_(std::move(bound)) {}

    std::size_t dimension() const noexcept { return bound_.size(); }
    const ExponentVector& bound() const noexcept { return bound_; }
    const std::vector<Interval>& parts() const noexcept { return parts_; }

    void add(Interval iv);
    /// Sorts parts lexicographically by (low, high).
    void canonicalize();
    /// Minimum of rho(high) over parts, or n for an empty partition.
    int minRho() const;

  private:
    ExponentVector bound_;
    std::vector<Interval> parts_;
};

/// Q[a,b]: coefficient 1 on every point of iv.
TruncatedSeries intervalPoly(const Interval& iv, const ExponentVector& bound);

/// Join of all shifts and (shifted) generator exponents. Makes m positively g-determined.
ExponentVector determineBound(const ModuleExpr& m);

/// H_M(X) truncated at g. Requires g ≽ determineBound(m).
TruncatedSeries seriesOf(const ModuleExpr& m, const ExponentVector& g);

/// p - q, or NegativityError naming the first exponent that would go negative.
TruncatedSeries subtractChecked(const TruncatedSeries& p, const TruncatedSeries& q);

/// The parts of pp sum exactly to h.
bool verifyPartition(const TruncatedSeries& h, const HilbertPartition& pp);

} // namespace hilbert

#endif
