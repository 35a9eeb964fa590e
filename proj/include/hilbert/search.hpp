#ifndef HILBERT_SEARCH_HPP
#define HILBERT_SEARCH_HPP

// Backtracking search for Hilbert partitions of prescribed depth.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "hilbert/series.hpp"

namespace hilbert {

/// Which uncovered monomial the search branches on next.
enum class ElementOrder { lexAsc, lexDesc, byRhoAsc, fewestCoversFirst };
/// Order in which the cover endpoints of one monomial are tried.
enum class CoverOrder { lexAsc, lexDesc, smallestBoxFirst, largestBoxFirst };
/// How the depth driver walks s.
enum class DepthStrategy { binary, descendingScan };

std::string_view toString(ElementOrder o);
std::string_view toString(CoverOrder o);
std::optional<ElementOrder> parseElementOrder(std::string_view s);
std::optional<CoverOrder> parseCoverOrder(std::string_view s);

struct SearchConfig
{
    ElementOrder elementOrder = ElementOrder::fewestCoversFirst;
    CoverOrder coverOrder = CoverOrder::lexAsc;
    std::optional<std::uint64_t> nodeLimit;
    std::optional<std::chrono::milliseconds> timeLimit;
    DepthStrategy strategy = DepthStrategy::binary;

    /// Prune nodes whose per-level monomial counts cannot be met by any
    /// partition of the required depth. Only active for squarefree bounds.
    bool levelCountPrune = true;
    /// Remember residuals that already failed.
    bool memoizeFailures = false;
    /// Stanley search only: test candidate covers for disjointness against the
    /// intervals chosen so far instead of against the residual polynomial.
    bool intervalDisjointness = false;
};

struct SearchStats
{
    std::uint64_t nodesVisited = 0;
    std::uint64_t coversTried = 0;
    std::uint64_t deadEnds = 0;
    std::chrono::nanoseconds elapsed{0};

    SearchStats& operator+=(const SearchStats& other);
};

/// One summand K[vars](-shift) of a Hilbert decomposition.
struct DecompositionSpace
{
    ExponentVector shift;
    VariableSet vars;
    friend auto operator<=>(const DecompositionSpace&, const DecompositionSpace&) = default;
    friend bool operator==(const DecompositionSpace&, const DecompositionSpace&) = default;
};

struct HilbertDecomposition
{
    std::vector<DecompositionSpace> spaces;
    /// Minimum number of variables over spaces; n for an empty decomposition.
    int depth(std::size_t n) const;
};

/// Monomials of p with rho < s, in the configured order.
std::vector<ExponentVector> findElementsToCover(const ExponentVector& g, int s, const TruncatedSeries& p,
                                                const SearchConfig& cfg = {});

/// Endpoints x ≽ a with rho(x) = s, x in the support of p, and [a, x] fully
/// present in p, in the configured cover order.
std::vector<ExponentVector> findPossibleCovers(const ExponentVector& g, int s, const TruncatedSeries& p,
                                               const ExponentVector& a, const SearchConfig& cfg = {});

/// A partition of p with every high endpoint at rho ≥ s, or nullopt when none
/// exists. Throws LimitExceeded when the budget runs out first.
std::optional<HilbertPartition> checkHilbertDepth(const ExponentVector& g, int s, const TruncatedSeries& p,
                                                  const SearchConfig& cfg = {}, SearchStats* stats = nullptr);

struct DepthResult
{
    int value = 0;
    HilbertPartition certificate;
    SearchStats stats;
};

/// Hilbert depth of the module whose truncated series is p.
DepthResult hdepth(const TruncatedSeries& p, const SearchConfig& cfg = {});
DepthResult hdepth(const ModuleExpr& m, const SearchConfig& cfg = {});

/// Hilbert decomposition induced by a partition: one space K[Z_b](-c) per c in G[a,b].
HilbertDecomposition renderDecomposition(const HilbertPartition& pp, const ExponentVector& g);

/// Series of a decomposition truncated at g.
TruncatedSeries seriesOf(const HilbertDecomposition& d, const ExponentVector& g);

struct BruteForceCaps
{
    std::size_t maxSupport = 16;
    TruncatedSeries::Coefficient maxCoefficient = 3;
};

/// Exhaustive maximum over all Hilbert partitions of min rho(high).
/// Throws CapExceeded above the caps.
int bruteForceHdepth(const TruncatedSeries& p, const ExponentVector& g, const BruteForceCaps& caps = {});

} // namespace hilbert

#endif
