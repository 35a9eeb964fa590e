#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <fstream>
#include <set>
#include <sstream>

#include "hilbert/report.hpp"
#include "hilbert/search.hpp"
#include "test_support.hpp"

using namespace hilbert;
using namespace hilbert::testing;

namespace {

std::string readFixture(const std::string& name)
{
    std::ifstream in(std::string(HILBERT_FIXTURE_DIR) + "/" + name);
    REQUIRE(in);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::set<ExponentVector> asSet(const std::vector<ExponentVector>& v) { return {v.begin(), v.end()}; }

void checkCertificate(const TruncatedSeries& p, const HilbertPartition& pp, int s)
{
    CHECK(verifyPartition(p, pp));
    for (const auto& iv : pp.parts())
        CHECK(rho(iv.high(), p.bound()) >= s);
}

const ElementOrder kElementOrders[] = {ElementOrder::lexAsc, ElementOrder::lexDesc, ElementOrder::byRhoAsc,
                                        ElementOrder::fewestCoversFirst};
const CoverOrder kCoverOrders[] = {CoverOrder::lexAsc, CoverOrder::lexDesc, CoverOrder::smallestBoxFirst,
                                    CoverOrder::largestBoxFirst};

} // namespace

TEST_CASE("findElementsToCover")
{
    const auto g = ev({1, 1});
    CHECK(findElementsToCover(g, 1, fourMonomialSeries()) == std::vector{ev({0, 0})});
    CHECK(findElementsToCover(g, 0, fourMonomialSeries()).empty());
    CHECK(asSet(findElementsToCover(g, 2, fourMonomialSeries())) == std::set{ev({0, 0}), ev({1, 0}), ev({0, 1})});

    SearchConfig cfg;
    cfg.elementOrder = ElementOrder::lexAsc;
    CHECK(findElementsToCover(g, 2, fourMonomialSeries(), cfg) == std::vector{ev({0, 0}), ev({0, 1}), ev({1, 0})});
    cfg.elementOrder = ElementOrder::lexDesc;
    CHECK(findElementsToCover(g, 2, fourMonomialSeries(), cfg) == std::vector{ev({1, 0}), ev({0, 1}), ev({0, 0})});
    cfg.elementOrder = ElementOrder::byRhoAsc;
    CHECK(findElementsToCover(g, 2, fourMonomialSeries(), cfg).front() == ev({0, 0}));
}

TEST_CASE("findPossibleCovers")
{
    const auto g = ev({1, 1});
    CHECK(asSet(findPossibleCovers(g, 1, fourMonomialSeries(), ev({0, 0}))) == std::set{ev({1, 0}), ev({0, 1})});
    CHECK(findPossibleCovers(g, 2, fourMonomialSeries(), ev({0, 0})) == std::vector{g});
    CHECK(findPossibleCovers(g, 2, fourMonomialSeries(), ev({1, 0})) == std::vector{g});

    const auto p = series(g, {{ev({0, 0}), 1}, {ev({1, 0}), 1}});
    CHECK(findPossibleCovers(g, 2, p, ev({0, 0})).empty());
    CHECK_THROWS_AS(subtractChecked(p, intervalPoly(Interval(ev({0, 0}), g), g)), NegativityError);

    SearchConfig cfg;
    cfg.coverOrder = CoverOrder::lexDesc;
    CHECK(findPossibleCovers(g, 1, fourMonomialSeries(), ev({0, 0}), cfg) == std::vector{ev({1, 0}), ev({0, 1})});
    cfg.coverOrder = CoverOrder::lexAsc;
    CHECK(findPossibleCovers(g, 1, fourMonomialSeries(), ev({0, 0}), cfg) == std::vector{ev({0, 1}), ev({1, 0})});
}

TEST_CASE("checkHilbertDepth on the four-monomial example")
{
    const auto g = ev({1, 1});
    const auto found = checkHilbertDepth(g, 1, fourMonomialSeries());
    REQUIRE(found);
    checkCertificate(fourMonomialSeries(), *found, 1);

    CHECK_FALSE(checkHilbertDepth(g, 2, fourMonomialSeries()));
    CHECK(bruteForceHdepth(fourMonomialSeries(), g) == 1);
}

TEST_CASE("checkHilbertDepth on the free module")
{
    const auto g = ev({0, 0, 0});
    const auto p = series(g, {{g, 1}});
    for (int s = 0; s <= 3; ++s) {
        const auto found = checkHilbertDepth(g, s, p);
        REQUIRE(found);
        CHECK(found->parts() == std::vector{Interval(g, g)});
    }
}

TEST_CASE("hdepth examples")
{
    CHECK(hdepth(maximalIdealModule(5)).value == 3);
    const auto r62 = hdepth(freePlusMaximal(4, 2));
    CHECK(r62.value == 3);
    checkCertificate(seriesOf(freePlusMaximal(4, 2), ones(4)), r62.certificate, 3);
    const auto r63 = hdepth(freePlusMaximal(6, 1));
    CHECK(r63.value == 4);
    checkCertificate(seriesOf(freePlusMaximal(6, 1), ones(6)), r63.certificate, 4);
}

TEST_CASE("printed partitions verify")
{
    const auto h62 = seriesOf(freePlusMaximal(4, 2), ones(4));
    for (const char* name : {"r2_plus_m4_a.part", "r2_plus_m4_b.part"}) {
        const auto pp = parsePartition(readFixture(name), ones(4));
        CHECK(verifyPartition(h62, pp));
        CHECK(pp.minRho() == 3);
    }
    const auto pp = parsePartition(readFixture("r_plus_m6.part"), ones(6));
    CHECK(verifyPartition(seriesOf(freePlusMaximal(6, 1), ones(6)), pp));
    CHECK(pp.minRho() == 4);
}

TEST_CASE("renderDecomposition")
{
    const auto g = ones(4);
    const auto pp = parsePartition(readFixture("r2_plus_m4_a.part"), g);
    const auto d = renderDecomposition(pp, g);
    CHECK(d.spaces.size() == 15);
    CHECK(d.depth(4) == 3);
    CHECK(d.spaces.front() == DecompositionSpace{ev({0, 0, 0, 0}), VariableSet(4, {0, 1, 2})});
    CHECK(seriesOf(d, g) == seriesOf(freePlusMaximal(4, 2), g));

    HilbertPartition top(g);
    top.add(Interval(g, g));
    const auto dt = renderDecomposition(top, g);
    CHECK(dt.spaces == std::vector{DecompositionSpace{g, VariableSet(4, {0, 1, 2, 3})}});

    HilbertPartition cover(ev({1, 1}));
    cover.add(Interval(ev({0, 0}), ev({1, 0})));
    CHECK(renderDecomposition(cover, ev({1, 1})).spaces ==
          std::vector{DecompositionSpace{ev({0, 0}), VariableSet(2, {0})}});
}

TEST_CASE("bruteForceHdepth examples")
{
    CHECK(bruteForceHdepth(fourMonomialSeries(), ev({1, 1})) == 1);
    const auto g = ev({2, 1, 1});
    CHECK(bruteForceHdepth(series(g, {{g, 1}}), g) == 3);
    CHECK(bruteForceHdepth(series(ev({1}), {{ev({0}), 1}, {ev({1}), 1}}), ev({1})) == 1);
    const auto box = intervalPoly(Interval(ev({0, 0, 0}), ev({2, 2, 2})), ev({2, 2, 2}));
    CHECK_THROWS_AS(bruteForceHdepth(box, ev({2, 2, 2})), CapExceeded);
    CHECK_THROWS_AS(bruteForceHdepth(fourMonomialSeries(), ev({1, 1}), {16, 1}), CapExceeded);
}

TEST_CASE("hdepth agrees with the exhaustive oracle")
{
    RandomInstances rnd(2024);
    int instances = 0;
    int squarefree = 0;
    while (instances < 250) {
        const std::size_t n = static_cast<std::size_t>(rnd.uniform(1, 3));
        const auto g = instances % 3 == 0 ? ones(n) : rnd.bound(n, 2);
        const auto p = rnd.polynomial(g, 16, 2);
        const int oracle = bruteForceHdepth(p, g);
        const auto r = hdepth(p);
        CAPTURE(p);
        CHECK(r.value == oracle);
        checkCertificate(p, r.certificate, r.value);
        ++instances;
        squarefree += g == ones(n);
    }
    CHECK(squarefree >= 50);
}

TEST_CASE("success at s implies success below s")
{
    RandomInstances rnd(7);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = rnd.bound(static_cast<std::size_t>(rnd.uniform(1, 3)), 2);
        const auto p = rnd.polynomial(g, 27, 2);
        const int n = static_cast<int>(g.size());
        bool succeededAbove = false;
        for (int s = n; s >= 0; --s) {
            const auto found = checkHilbertDepth(g, s, p);
            if (succeededAbove)
                CHECK(found.has_value());
            if (found) {
                checkCertificate(p, *found, s);
                succeededAbove = true;
            }
        }
        CHECK(succeededAbove);
    }
}

TEST_CASE("hdepth does not depend on the choice of g")
{
    RandomInstances rnd(99);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rnd.uniform(1, 3));
        const auto m = rnd.module(n, 2);
        const auto g = determineBound(m);
        const auto bigger = g + rnd.bound(n, 1);
        CAPTURE(g);
        CAPTURE(bigger);
        CHECK(hdepth(seriesOf(m, g)).value == hdepth(seriesOf(m, bigger)).value);
    }
}

TEST_CASE("the value does not depend on the search orders")
{
    RandomInstances rnd(5);
    std::vector<TruncatedSeries> inputs = {seriesOf(freePlusMaximal(4, 2), ones(4)), fourMonomialSeries()};
    for (int k = 0; k < 20; ++k)
        inputs.push_back(rnd.polynomial(rnd.bound(3, 2), 20, 2));
    for (const auto& p : inputs) {
        const int reference = hdepth(p).value;
        for (auto eo : kElementOrders)
            for (auto co : kCoverOrders) {
                SearchConfig cfg;
                cfg.elementOrder = eo;
                cfg.coverOrder = co;
                const auto r = hdepth(p, cfg);
                CHECK(r.value == reference);
                checkCertificate(p, r.certificate, r.value);
            }
        SearchConfig scan;
        scan.strategy = DepthStrategy::descendingScan;
        CHECK(hdepth(p, scan).value == reference);
    }
}

TEST_CASE("pruning and memoization do not change the answer")
{
    RandomInstances rnd(6);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = static_cast<std::size_t>(rnd.uniform(2, 4));
        const auto g = trial % 2 ? ones(n) : rnd.bound(n, 2);
        const auto p = rnd.polynomial(g, 24, 2);
        const int reference = hdepth(p).value;
        for (bool prune : {false, true})
            for (bool memo : {false, true}) {
                SearchConfig cfg;
                cfg.levelCountPrune = prune;
                cfg.memoizeFailures = memo;
                CHECK(hdepth(p, cfg).value == reference);
            }
    }
}

TEST_CASE("runs are deterministic")
{
    const auto p = seriesOf(freePlusMaximal(4, 2), ones(4));
    const auto a = hdepth(p);
    const auto b = hdepth(p);
    CHECK(a.value == b.value);
    CHECK(a.certificate.parts() == b.certificate.parts());
    CHECK(a.stats.nodesVisited == b.stats.nodesVisited);
    CHECK(a.stats.coversTried == b.stats.coversTried);
}

TEST_CASE("stats are consistent")
{
    RandomInstances rnd(8);
    for (int trial = 0; trial < 40; ++trial) {
        const auto p = rnd.polynomial(rnd.bound(3, 2), 27, 2);
        const auto r = hdepth(p);
        CHECK(r.stats.nodesVisited >= 1);
        CHECK(r.stats.deadEnds <= r.stats.nodesVisited);
        // Every tried cover opens exactly one child node; the rest are the
        // roots of the depth probes, at most one per candidate depth.
        CHECK(r.stats.nodesVisited >= r.stats.coversTried);
        CHECK(r.stats.nodesVisited - r.stats.coversTried <= 4);
    }
}

TEST_CASE("budget exhaustion is reported")
{
    SearchConfig cfg;
    cfg.nodeLimit = 5;
    cfg.levelCountPrune = false;
    CHECK_THROWS_AS(hdepth(maximalIdealModule(9), cfg), LimitExceeded);
    CHECK_THROWS_AS(checkHilbertDepth(ev({1, 1}), 3, fourMonomialSeries()), PreconditionError);
    CHECK_THROWS_AS(checkHilbertDepth(ev({1, 2}), 1, fourMonomialSeries()), PreconditionError);
}
