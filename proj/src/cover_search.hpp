#ifndef HILBERT_SRC_COVER_SEARCH_HPP
#define HILBERT_SRC_COVER_SEARCH_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "hilbert/search.hpp"
#include "lattice.hpp"

namespace hilbert::detail {

/// Extra admissibility test applied to every interval the search commits to.
class CoverGate
{
  public:
    virtual ~CoverGate() = default;
    virtual bool accepts(const Lattice& lattice, Lattice::Index low, Lattice::Index high) const = 0;
    /// [low, high] lies inside the support of the original series. Only
    /// consulted by the interval-disjointness feasibility test.
    virtual bool boxInSupport(const Lattice& lattice, Lattice::Index low, Lattice::Index high) const = 0;
};

/// Node and wall-clock allowance shared by all searches of one depth computation.
class Budget
{
  public:
    Budget() = default;
    explicit Budget(const SearchConfig& cfg);

    /// Charges one node; throws LimitExceeded once the allowance is spent.
    void charge();

  private:
    std::optional<std::uint64_t> nodesLeft_;
    std::optional<std::chrono::steady_clock::time_point> deadline_;
    std::uint32_t sinceClockCheck_ = 0;
};

/// Depth-s search over one truncated series.
class CoverSearch
{
  public:
    CoverSearch(const TruncatedSeries& p, int s, const SearchConfig& cfg, Budget& budget, SearchStats& stats,
                const CoverGate* gate = nullptr);

    std::optional<HilbertPartition> run();

  private:
    using Index = Lattice::Index;

    struct Chosen
    {
        Index low;
        Index high;
    };

    bool visit();
    bool levelsFeasible() const;
    bool coverFits(Index low, Index high) const;
    bool residualHolds(Index low, Index high) const;
    bool disjointFromChosen(Index low, Index high) const;
    bool isMinimal(Index a) const;
    bool leafAccepted() const;
    void apply(Index low, Index high, std::int64_t sign);
    std::string memoKey() const;
    std::size_t countCovers(Index a, bool constrained, bool stopAtFirst) const;
    bool precedes(Index lhs, Index rhs, std::size_t lhsCovers, std::size_t rhsCovers) const;

    Lattice lattice_;
    int s_;
    SearchConfig cfg_;
    Budget& budget_;
    SearchStats& stats_;
    const CoverGate* gate_;
    bool useLevelCounts_;

    std::vector<std::int64_t> residual_;
    std::vector<std::int64_t> levelCount_;
    std::vector<std::vector<std::int64_t>> binom_;

    // Points of the original support with rho < s, lexicographic.
    std::vector<Index> lowPoints_;
    // Per lattice index: position in lowPoints_, or -1.
    std::vector<std::int32_t> lowSlot_;
    // Per low point: admissible cover endpoints in cover order.
    std::vector<std::vector<Index>> targets_;
    // Per low point: rank of the last cover committed from it on the current path.
    std::vector<std::int32_t> lastRank_;

    std::vector<Chosen> chosen_;
    std::vector<std::uint8_t> inE_;
    std::unordered_set<std::string> failed_;
};

/// Largest s in [0, n] for which check(s) yields a partition.
DepthResult runDepthDriver(std::size_t n, const SearchConfig& cfg,
                           const std::function<std::optional<HilbertPartition>(int, Budget&, SearchStats&)>& check);

} // namespace hilbert::detail

#endif
