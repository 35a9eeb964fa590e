#include "cover_search.hpp"

#include <algorithm>

namespace hilbert::detail {

Budget::Budget(const SearchConfig& cfg) : nodesLeft_(cfg.nodeLimit)
{
    if (cfg.timeLimit)
        deadline_ = std::chrono::steady_clock::now() + *cfg.timeLimit;
}

void Budget::charge()
{
    if (nodesLeft_) {
        if (*nodesLeft_ == 0)
            throw LimitExceeded("node limit exceeded");
        --*nodesLeft_;
    }
    if (deadline_ && ++sinceClockCheck_ >= 256) {
        sinceClockCheck_ = 0;
        if (std::chrono::steady_clock::now() > *deadline_)
            throw LimitExceeded("time limit exceeded");
    }
}

CoverSearch::CoverSearch(const TruncatedSeries& p, int s, const SearchConfig& cfg, Budget& budget,
                         SearchStats& stats, const CoverGate* gate)
    : lattice_(p.bound()), s_(s), cfg_(cfg), budget_(budget), stats_(stats), gate_(gate),
      useLevelCounts_(cfg.levelCountPrune && lattice_.squarefree())
{
    const auto n = static_cast<int>(lattice_.dimension());
    if (s < 0 || s > n)
        throw PreconditionError("depth target out of range: " + std::to_string(s));

    residual_.assign(lattice_.size(), 0);
    levelCount_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (const auto& [a, c] : p.terms()) {
        if (c > static_cast<TruncatedSeries::Coefficient>(INT64_MAX / 2))
            throw std::overflow_error("coefficient too large for the search");
        const Index idx = lattice_.index(a);
        residual_[idx] = static_cast<std::int64_t>(c);
        levelCount_[lattice_.rho(idx)] += static_cast<std::int64_t>(c);
    }

    binom_.assign(static_cast<std::size_t>(n) + 1, std::vector<std::int64_t>(static_cast<std::size_t>(n) + 1, 0));
    for (int i = 0; i <= n; ++i) {
        binom_[i][0] = 1;
        for (int k = 1; k <= i; ++k)
            binom_[i][k] = binom_[i - 1][k - 1] + (k <= i - 1 ? binom_[i - 1][k] : 0);
    }

    lowSlot_.assign(lattice_.size(), -1);
    const auto top = static_cast<Index>(lattice_.size() - 1);
    for (Index a = 0; a < lattice_.size(); ++a) {
        if (residual_[a] == 0 || lattice_.rho(a) >= s_)
            continue;
        lowSlot_[a] = static_cast<std::int32_t>(lowPoints_.size());
        lowPoints_.push_back(a);

        std::vector<Index> ends;
        lattice_.forEachInBox(a, top, [&](Index x) {
            if (lattice_.rho(x) == s_ && residual_[x] > 0 && residualHolds(a, x) &&
                (gate_ == nullptr || gate_->accepts(lattice_, a, x)))
                ends.push_back(x);
            return true;
        });
        auto lexLess = [](Index l, Index r) { return l < r; };
        switch (cfg_.coverOrder) {
        case CoverOrder::lexAsc:
            std::sort(ends.begin(), ends.end(), lexLess);
            break;
        case CoverOrder::lexDesc:
            std::sort(ends.begin(), ends.end(), [](Index l, Index r) { return l > r; });
            break;
        case CoverOrder::smallestBoxFirst:
        case CoverOrder::largestBoxFirst: {
            const bool smallest = cfg_.coverOrder == CoverOrder::smallestBoxFirst;
            std::sort(ends.begin(), ends.end(), [&](Index l, Index r) {
                const auto bl = lattice_.boxSize(a, l);
                const auto br = lattice_.boxSize(a, r);
                if (bl != br)
                    return smallest ? bl < br : bl > br;
                return l < r;
            });
            break;
        }
        }
        targets_.push_back(std::move(ends));
    }
    lastRank_.assign(lowPoints_.size(), -1);
}

std::optional<HilbertPartition> CoverSearch::run()
{
    const auto start = std::chrono::steady_clock::now();
    const bool found = visit();
    stats_.elapsed += std::chrono::steady_clock::now() - start;
    if (!found)
        return std::nullopt;

    HilbertPartition pp(lattice_.bound());
    for (const auto& c : chosen_)
        pp.add(Interval(lattice_.point(c.low), lattice_.point(c.high)));
    for (Index idx = 0; idx < lattice_.size(); ++idx) {
        for (std::int64_t k = 0; k < residual_[idx]; ++k) {
            const auto pt = lattice_.point(idx);
            pp.add(Interval(pt, pt));
        }
    }
    pp.canonicalize();
    return pp;
}

bool CoverSearch::visit()
{
    ++stats_.nodesVisited;
    budget_.charge();

    if (useLevelCounts_ && !levelsFeasible()) {
        ++stats_.deadEnds;
        return false;
    }
    std::string key;
    if (cfg_.memoizeFailures) {
        key = memoKey();
        if (failed_.contains(key)) {
            ++stats_.deadEnds;
            return false;
        }
    }
    auto fail = [&] {
        ++stats_.deadEnds;
        if (cfg_.memoizeFailures)
            failed_.insert(std::move(key));
        return false;
    };

    // Pick the branching monomial. Every uncovered monomial needs some cover
    // (else the node is dead); only a minimal one is guaranteed to be the low
    // end of its interval, so branching happens on minimal monomials only.
    const bool wantCounts = cfg_.elementOrder == ElementOrder::fewestCoversFirst;
    std::int64_t best = -1;
    std::size_t bestCovers = 0;
    bool anyUncovered = false;
    for (const Index a : lowPoints_) {
        if (residual_[a] == 0)
            continue;
        anyUncovered = true;
        if (!isMinimal(a)) {
            if (countCovers(a, false, true) == 0)
                return fail();
            continue;
        }
        const std::size_t covers = countCovers(a, true, !wantCounts);
        if (covers == 0)
            return fail();
        if (best < 0 || precedes(a, static_cast<Index>(best), covers, bestCovers)) {
            best = a;
            bestCovers = covers;
        }
    }
    if (!anyUncovered)
        return leafAccepted() ? true : fail();

    const auto low = static_cast<Index>(best);
    const auto slot = static_cast<std::size_t>(lowSlot_[low]);
    const std::int32_t saved = lastRank_[slot];
    const auto& ends = targets_[slot];
    // Covers from one monomial are committed in nondecreasing rank, which
    // removes reorderings of the same multiset of intervals.
    for (auto r = static_cast<std::size_t>(std::max(saved, 0)); r < ends.size(); ++r) {
        const Index high = ends[r];
        if (!coverFits(low, high))
            continue;
        ++stats_.coversTried;
        apply(low, high, 1);
        lastRank_[slot] = static_cast<std::int32_t>(r);
        chosen_.push_back({low, high});
        if (visit())
            return true;
        chosen_.pop_back();
        lastRank_[slot] = saved;
        apply(low, high, -1);
    }
    return fail();
}

bool CoverSearch::levelsFeasible() const
{
    // On a squarefree box an interval from level j to level s holds
    // C(s-j, k-j) points of level k, so the number of intervals starting at
    // each level below s is forced by the level counts.
    const int z = lattice_.pinnedCount();
    if (s_ <= z)
        return true;
    std::vector<__int128> starts(static_cast<std::size_t>(s_), 0);
    __int128 total = 0;
    for (int k = z; k < s_; ++k) {
        __int128 v = levelCount_[k];
        for (int j = z; j < k; ++j)
            v -= starts[j] * binom_[s_ - j][k - j];
        if (v < 0)
            return false;
        starts[k] = v;
        total += v;
    }
    return total <= levelCount_[s_];
}

bool CoverSearch::residualHolds(Index low, Index high) const
{
    return lattice_.forEachInBox(low, high, [&](Index c) { return residual_[c] > 0; });
}

bool CoverSearch::disjointFromChosen(Index low, Index high) const
{
    const std::size_t n = lattice_.dimension();
    for (const auto& c : chosen_) {
        bool meets = true;
        if (lattice_.squarefree()) {
            meets = ((c.low | low) & ~(c.high & high)) == 0;
        } else {
            for (std::size_t i = 0; i < n && meets; ++i)
                meets = std::max(lattice_.coord(c.low, i), lattice_.coord(low, i)) <=
                        std::min(lattice_.coord(c.high, i), lattice_.coord(high, i));
        }
        if (meets)
            return false;
    }
    return true;
}

bool CoverSearch::coverFits(Index low, Index high) const
{
    if (cfg_.intervalDisjointness && gate_ != nullptr)
        return disjointFromChosen(low, high);
    return residualHolds(low, high);
}

bool CoverSearch::isMinimal(Index a) const
{
    // Anything in the support below a has rho ≤ rho(a) < s, so it is uncovered too.
    return lattice_.forEachInBox(0, a, [&](Index c) { return c == a || residual_[c] == 0; });
}

bool CoverSearch::leafAccepted() const
{
    if (gate_ == nullptr)
        return true;
    for (Index idx = 0; idx < lattice_.size(); ++idx)
        if (residual_[idx] > 0 && !gate_->accepts(lattice_, idx, idx))
            return false;
    return true;
}

void CoverSearch::apply(Index low, Index high, std::int64_t sign)
{
    lattice_.forEachInBox(low, high, [&](Index c) {
        residual_[c] -= sign;
        levelCount_[lattice_.rho(c)] -= sign;
        return true;
    });
}

std::string CoverSearch::memoKey() const
{
    std::string key;
    key.reserve(residual_.size() * sizeof(std::int64_t) + lastRank_.size() * sizeof(std::int32_t));
    key.append(reinterpret_cast<const char*>(residual_.data()), residual_.size() * sizeof(std::int64_t));
    key.append(reinterpret_cast<const char*>(lastRank_.data()), lastRank_.size() * sizeof(std::int32_t));
    return key;
}

std::size_t CoverSearch::countCovers(Index a, bool constrained, bool stopAtFirst) const
{
    const auto slot = static_cast<std::size_t>(lowSlot_[a]);
    const auto& ends = targets_[slot];
    std::size_t count = 0;
    const auto start = constrained ? static_cast<std::size_t>(std::max(lastRank_[slot], 0)) : std::size_t{0};
    for (std::size_t r = start; r < ends.size(); ++r) {
        if (coverFits(a, ends[r])) {
            ++count;
            if (stopAtFirst)
                break;
        }
    }
    return count;
}

bool CoverSearch::precedes(Index lhs, Index rhs, std::size_t lhsCovers, std::size_t rhsCovers) const
{
    switch (cfg_.elementOrder) {
    case ElementOrder::lexAsc:
        return lhs < rhs;
    case ElementOrder::lexDesc:
        return lhs > rhs;
    case ElementOrder::byRhoAsc:
        if (lattice_.rho(lhs) != lattice_.rho(rhs))
            return lattice_.rho(lhs) < lattice_.rho(rhs);
        return lhs < rhs;
    case ElementOrder::fewestCoversFirst:
        if (lhsCovers != rhsCovers)
            return lhsCovers < rhsCovers;
        return lhs < rhs;
    }
    return false;
}

DepthResult runDepthDriver(std::size_t n, const SearchConfig& cfg,
                           const std::function<std::optional<HilbertPartition>(int, Budget&, SearchStats&)>& check)
{
    const auto start = std::chrono::steady_clock::now();
    Budget budget(cfg);
    DepthResult result;
    auto finish = [&] {
        result.stats.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    };

    if (cfg.strategy == DepthStrategy::descendingScan) {
        for (int s = static_cast<int>(n); s >= 0; --s) {
            if (auto cert = check(s, budget, result.stats)) {
                result.value = s;
                result.certificate = std::move(*cert);
                return finish();
            }
        }
        throw std::logic_error("depth 0 search failed");
    }

    auto base = check(0, budget, result.stats);
    if (!base)
        throw std::logic_error("depth 0 search failed");
    result.certificate = std::move(*base);
    int lo = 0;
    int hi = static_cast<int>(n);
    while (lo < hi) {
        const int mid = (lo + hi + 1) / 2;
        if (auto cert = check(mid, budget, result.stats)) {
            lo = mid;
            result.certificate = std::move(*cert);
        } else {
            hi = mid - 1;
        }
    }
    result.value = lo;
    return finish();
}

} // namespace hilbert::detail
