#include "hilbert/search.hpp"

#include <algorithm>
#include <array>

#include "cover_search.hpp"

namespace hilbert {

namespace {

constexpr std::array<std::pair<ElementOrder, std::string_view>, 4> kElementOrders{{
    {ElementOrder::lexAsc, "lexAsc"},
    {ElementOrder::lexDesc, "lexDesc"},
    {ElementOrder::byRhoAsc, "byRhoAsc"},
    {ElementOrder::fewestCoversFirst, "fewestCoversFirst"},
}};

constexpr std::array<std::pair<CoverOrder, std::string_view>, 4> kCoverOrders{{
    {CoverOrder::lexAsc, "lexAsc"},
    {CoverOrder::lexDesc, "lexDesc"},
    {CoverOrder::smallestBoxFirst, "smallestBoxFirst"},
    {CoverOrder::largestBoxFirst, "largestBoxFirst"},
}};

void requireSearchable(const ExponentVector& g, int s, const TruncatedSeries& p)
{
    if (p.bound() != g)
        throw PreconditionError("series bound differs from g");
    if (s < 0 || static_cast<std::size_t>(s) > g.size())
        throw PreconditionError("depth target out of range");
}

bool boxPresent(const TruncatedSeries& p, const ExponentVector& a, const ExponentVector& x)
{
    bool ok = true;
    forEachPoint(a, x, [&](const ExponentVector& c) { ok = ok && p.coefficient(c) > 0; });
    return ok;
}

} // namespace

std::string_view toString(ElementOrder o)
{
    for (const auto& [value, name] : kElementOrders)
        if (value == o)
            return name;
    return "?";
}

std::string_view toString(CoverOrder o)
{
    for (const auto& [value, name] : kCoverOrders)
        if (value == o)
            return name;
    return "?";
}

std::optional<ElementOrder> parseElementOrder(std::string_view s)
{
    for (const auto& [value, name] : kElementOrders)
        if (name == s)
            return value;
    return std::nullopt;
}

std::optional<CoverOrder> parseCoverOrder(std::string_view s)
{
    for (const auto& [value, name] : kCoverOrders)
        if (name == s)
            return value;
    return std::nullopt;
}

SearchStats& SearchStats::operator+=(const SearchStats& other)
{
    nodesVisited += other.nodesVisited;
    coversTried += other.coversTried;
    deadEnds += other.deadEnds;
    elapsed += other.elapsed;
    return *this;
}

int HilbertDecomposition::depth(std::size_t n) const
{
    auto d = static_cast<int>(n);
    for (const auto& sp : spaces)
        d = std::min(d, static_cast<int>(sp.vars.size()));
    return d;
}

std::vector<ExponentVector> findElementsToCover(const ExponentVector& g, int s, const TruncatedSeries& p,
                                                const SearchConfig& cfg)
{
    requireSearchable(g, s, p);
    std::vector<ExponentVector> out;
    for (const auto& [a, c] : p.terms())
        if (rho(a, g) < s)
            out.push_back(a);

    switch (cfg.elementOrder) {
    case ElementOrder::lexAsc:
        break;
    case ElementOrder::lexDesc:
        std::reverse(out.begin(), out.end());
        break;
    case ElementOrder::byRhoAsc:
        std::stable_sort(out.begin(), out.end(),
                         [&](const auto& l, const auto& r) { return rho(l, g) < rho(r, g); });
        break;
    case ElementOrder::fewestCoversFirst: {
        std::vector<std::pair<std::size_t, ExponentVector>> keyed;
        for (auto& a : out)
            keyed.emplace_back(findPossibleCovers(g, s, p, a, cfg).size(), std::move(a));
        std::stable_sort(keyed.begin(), keyed.end(),
                         [](const auto& l, const auto& r) { return l.first < r.first; });
        out.clear();
        for (auto& [k, a] : keyed)
            out.push_back(std::move(a));
        break;
    }
    }
    return out;
}

std::vector<ExponentVector> findPossibleCovers(const ExponentVector& g, int s, const TruncatedSeries& p,
                                               const ExponentVector& a, const SearchConfig& cfg)
{
    requireSearchable(g, s, p);
    if (p.coefficient(a) == 0)
        throw PreconditionError("element is not in the support");
    if (rho(a, g) >= s)
        throw PreconditionError("element already has rho >= s");

    std::vector<ExponentVector> out;
    forEachPoint(a, g, [&](const ExponentVector& x) {
        if (rho(x, g) == s && p.coefficient(x) > 0 && boxPresent(p, a, x))
            out.push_back(x);
    });

    auto boxSize = [&](const ExponentVector& x) { return Interval(a, x).pointCount(); };
    switch (cfg.coverOrder) {
    case CoverOrder::lexAsc:
        break;
    case CoverOrder::lexDesc:
        std::reverse(out.begin(), out.end());
        break;
    case CoverOrder::smallestBoxFirst:
        std::stable_sort(out.begin(), out.end(),
                         [&](const auto& l, const auto& r) { return boxSize(l) < boxSize(r); });
        break;
    case CoverOrder::largestBoxFirst:
        std::stable_sort(out.begin(), out.end(),
                         [&](const auto& l, const auto& r) { return boxSize(l) > boxSize(r); });
        break;
    }
    return out;
}

std::optional<HilbertPartition> checkHilbertDepth(const ExponentVector& g, int s, const TruncatedSeries& p,
                                                  const SearchConfig& cfg, SearchStats* stats)
{
    requireSearchable(g, s, p);
    SearchStats local;
    detail::Budget budget(cfg);
    detail::CoverSearch search(p, s, cfg, budget, stats ? *stats : local);
    return search.run();
}

DepthResult hdepth(const TruncatedSeries& p, const SearchConfig& cfg)
{
    return detail::runDepthDriver(p.dimension(), cfg,
                                  [&](int s, detail::Budget& budget, SearchStats& stats) {
                                      detail::CoverSearch search(p, s, cfg, budget, stats);
                                      return search.run();
                                  });
}

DepthResult hdepth(const ModuleExpr& m, const SearchConfig& cfg)
{
    const ExponentVector g = determineBound(m);
    return hdepth(seriesOf(m, g), cfg);
}

HilbertDecomposition renderDecomposition(const HilbertPartition& pp, const ExponentVector& g)
{
    HilbertDecomposition d;
    for (const auto& iv : pp.parts()) {
        const VariableSet z = zSet(iv.high(), g);
        for (auto& c : gSet(iv, g))
            d.spaces.push_back({std::move(c), z});
    }
    return d;
}

TruncatedSeries seriesOf(const HilbertDecomposition& d, const ExponentVector& g)
{
    TruncatedSeries h(g);
    for (const auto& sp : d.spaces) {
        ExponentVector top = sp.shift;
        for (int j : sp.vars)
            top.set(static_cast<std::size_t>(j), g[static_cast<std::size_t>(j)]);
        if (!leq(sp.shift, g))
            throw PreconditionError("decomposition shift lies above the bound");
        forEachPoint(sp.shift, top, [&](const ExponentVector& c) { h.add(c); });
    }
    return h;
}

} // namespace hilbert
