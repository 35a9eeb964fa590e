#ifndef HILBERT_STANLEY_HPP
#define HILBERT_STANLEY_HPP

// Stanley depth of quotients I/J of monomial ideals, searched as Hilbert
// partitions whose induced spaces avoid the annihilator.

#include <optional>
#include <vector>

#include "hilbert/search.hpp"

namespace hilbert {

/// I/J with J ⊆ I, positively determined by bound().
class QuotientModule
{
  public:
    /// Uses the smallest bound covering the generators of I and J.
    QuotientModule(MonomialIdeal numerator, MonomialIdeal denominator);
    QuotientModule(MonomialIdeal numerator, MonomialIdeal denominator, ExponentVector bound);

    /// The single quotient term of m, when m is exactly that (unshifted).
    static std::optional<QuotientModule> fromModule(const ModuleExpr& m);

    std::size_t dimension() const noexcept { return numerator_.dimension(); }
    const MonomialIdeal& numerator() const noexcept { return numerator_; }
    const MonomialIdeal& denominator() const noexcept { return denominator_; }
    const ExponentVector& bound() const noexcept { return bound_; }
    const TruncatedSeries& series() const noexcept { return series_; }

    /// X^c ∈ I and X^c ∉ J.
    bool inSupport(const ExponentVector& c) const;

  private:
    MonomialIdeal numerator_;
    MonomialIdeal denominator_;
    ExponentVector bound_;
    TruncatedSeries series_;
};

using StanleySpace = DecompositionSpace;

struct StanleyDecomposition
{
    std::vector<StanleySpace> spaces;
    int depth(std::size_t n) const;
};

/// Some monomial u in the variables z has X^(c+u) ∈ J, i.e. K[z] meets Ann(X^c) in I/J.
bool annihilatorIntersects(const ExponentVector& c, const VariableSet& z, const QuotientModule& q);

std::optional<StanleyDecomposition> checkStanleyDepth(const QuotientModule& q, int s, const SearchConfig& cfg = {},
                                                      SearchStats* stats = nullptr);

struct StanleyDepthResult
{
    int value = 0;
    StanleyDecomposition certificate;
    HilbertPartition partition;
    SearchStats stats;
};

StanleyDepthResult sdepth(const QuotientModule& q, const SearchConfig& cfg = {});

/// The spaces tile the support of I/J exactly and none meets its annihilator.
bool verifyStanleyDecomposition(const QuotientModule& q, const StanleyDecomposition& d);

} // namespace hilbert

#endif
