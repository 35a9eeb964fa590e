// Acceptance gate: one PASS/FAIL line per criterion. Exit status is nonzero if
// any criterion fails. Pass --long to add the n = 10..12 benchmark rows.

#include <algorithm>
#include <chrono>
#include <cstring>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "hilbert/cli.hpp"
#include "hilbert/report.hpp"
#include "hilbert/stanley.hpp"
#include "test_support.hpp"

using namespace hilbert;
using namespace hilbert::testing;

namespace {

struct Outcome
{
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok) {
            pass = false;
            detail += (detail.empty() ? "" : "; ") + what;
        }
    }
};

std::string readFixture(const std::string& name)
{
    std::ifstream in(std::string(HILBERT_FIXTURE_DIR) + "/" + name);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool certifies(const TruncatedSeries& h, const HilbertPartition& pp, int s)
{
    return verifyPartition(h, pp) && pp.minRho() >= s;
}

Outcome maximalIdealFormula(bool longRun)
{
    Outcome o;
    const int top = longRun ? 12 : 9;
    const auto rows = cli::benchMaxIdeal(2, top, DepthKind::hilbert, SearchConfig{});
    std::ostringstream values;
    double seconds = 0;
    for (const auto& row : rows) {
        o.require(!row.limitExceeded && row.value == (row.n + 1) / 2, "n=" + std::to_string(row.n));
        values << (row.n == 2 ? "" : ",") << row.value;
        seconds += std::chrono::duration<double>(row.stats.elapsed).count();
    }
    std::ostringstream sink;
    o.require(cli::runCommand({"bench", "--maxideal", "2.." + std::to_string(top)}, sink, sink) == cli::kSuccess,
              "bench command exit status");
    o.require(seconds <= 120.0, "runtime above 120 s");
    if (o.pass) {
        std::ostringstream d;
        d << "n=2.." << top << " values " << values.str() << " in " << seconds << " s";
        o.detail = d.str();
    }
    return o;
}

Outcome freeSquaredPlusMaximal()
{
    Outcome o;
    const auto m = freePlusMaximal(4, 2);
    const auto h = seriesOf(m, ones(4));
    std::map<std::string, std::vector<Interval>> certificates;
    for (auto [eo, co] : {std::pair{ElementOrder::fewestCoversFirst, CoverOrder::lexAsc},
                          std::pair{ElementOrder::lexDesc, CoverOrder::largestBoxFirst},
                          std::pair{ElementOrder::lexAsc, CoverOrder::lexDesc}}) {
        SearchConfig cfg;
        cfg.elementOrder = eo;
        cfg.coverOrder = co;
        const auto r = hdepth(m, cfg);
        const std::string label = std::string(toString(eo)) + "/" + std::string(toString(co));
        o.require(r.value == 3, label + " gave " + std::to_string(r.value));
        o.require(certifies(h, r.certificate, 3), label + " certificate");
        o.require(renderDecomposition(r.certificate, ones(4)).depth(4) == 3, label + " decomposition depth");
        certificates[label] = r.certificate.parts();
    }
    for (const char* name : {"r2_plus_m4_a.part", "r2_plus_m4_b.part"})
        o.require(certifies(h, parsePartition(readFixture(name), ones(4)), 3), std::string("fixture ") + name);
    if (o.pass) {
        std::size_t distinct = 0;
        std::vector<std::vector<Interval>> seen;
        for (const auto& [label, parts] : certificates)
            if (std::find(seen.begin(), seen.end(), parts) == seen.end()) {
                seen.push_back(parts);
                ++distinct;
            }
        o.detail = "hdepth 3 under 3 orderings (" + std::to_string(distinct) +
                   " distinct certificates); both printed partitions verify";
    }
    return o;
}

Outcome freePlusMaximalSix()
{
    Outcome o;
    const auto m = freePlusMaximal(6, 1);
    const auto h = seriesOf(m, ones(6));
    const auto start = std::chrono::steady_clock::now();
    const auto fixture = parsePartition(readFixture("r_plus_m6.part"), ones(6));
    o.require(verifyPartition(h, fixture), "fixture does not sum to the series");
    o.require(fixture.minRho() == 4, "fixture min rho is " + std::to_string(fixture.minRho()));
    const double fixtureSeconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(fixtureSeconds < 1.0, "fixture check slower than 1 s");

    const auto r = hdepth(m);
    o.require(r.value == 4, "search gave " + std::to_string(r.value));
    o.require(certifies(h, r.certificate, 4), "search certificate");
    if (o.pass) {
        std::ostringstream d;
        d << "printed partition verifies with min rho 4 in " << fixtureSeconds << " s; search finds hdepth 4 in "
          << std::chrono::duration<double>(r.stats.elapsed).count() << " s";
        o.detail = d.str();
    }
    return o;
}

Outcome stanleyLayer()
{
    Outcome o;
    int instances = 0;
    auto compare = [&](const QuotientModule& q, int expected, const std::string& label) {
        const auto s = sdepth(q);
        const int hd = hdepth(q.series()).value;
        o.require(s.value == expected, label + " sdepth " + std::to_string(s.value));
        o.require(verifyStanleyDecomposition(q, s.certificate), label + " certificate");
        o.require(s.value <= hd, label + " sdepth above hdepth");
        ++instances;
    };
    for (std::size_t n = 2; n <= 7; ++n) {
        compare(QuotientModule(MonomialIdeal::maximal(n), MonomialIdeal::zero(n)), static_cast<int>((n + 1) / 2),
                "m, n=" + std::to_string(n));
        compare(QuotientModule(MonomialIdeal::unit(n), MonomialIdeal::maximal(n)), 0, "R/m, n=" + std::to_string(n));
        compare(QuotientModule(MonomialIdeal::unit(n), MonomialIdeal::zero(n)), static_cast<int>(n),
                "R, n=" + std::to_string(n));
    }
    RandomInstances rnd(4);
    for (int k = 0; k < 100; ++k) {
        const std::size_t n = static_cast<std::size_t>(rnd.uniform(1, 4));
        auto [num, den] = rnd.quotient(n, 2);
        const QuotientModule q(num, den);
        const auto s = sdepth(q);
        o.require(verifyStanleyDecomposition(q, s.certificate), "random quotient certificate");
        o.require(s.value <= hdepth(q.series()).value, "random quotient sdepth above hdepth");
        ++instances;
    }
    if (o.pass)
        o.detail = "sdepth(m)=ceil(n/2) for n=2..7, R/m gives 0, R gives n; sdepth <= hdepth on " +
                   std::to_string(instances) + " instances";
    return o;
}

Outcome oracleEquivalence()
{
    Outcome o;
    RandomInstances rnd(20240601);
    int agree = 0;
    const int total = 300;
    for (int k = 0; k < total; ++k) {
        const std::size_t n = static_cast<std::size_t>(rnd.uniform(1, 3));
        const auto g = k % 3 == 0 ? ones(n) : rnd.bound(n, 2);
        const auto p = rnd.polynomial(g, 16, 2);
        const int oracle = bruteForceHdepth(p, g);
        const auto r = hdepth(p);
        if (r.value == oracle && certifies(p, r.certificate, r.value))
            ++agree;
    }
    o.require(agree == total, std::to_string(total - agree) + " of " + std::to_string(total) + " disagree");
    if (o.pass)
        o.detail = std::to_string(total) + " random instances, n<=3, g<=(2,2,2), coefficients<=2";
    return o;
}

Outcome propertySuites()
{
    Outcome o;
    const auto all = [](const ExponentVector& g) { return pointsOf(ExponentVector::zero(g.size()), g); };

    std::size_t splits = 0;
    bool splitOk = true;
    for (const auto& g : all(ev({3, 3, 3})))
        for (const auto& a : all(g))
            for (const auto& b : pointsOf(a, g)) {
                const Interval iv(a, b);
                forEachPoint(a, b, [&](const ExponentVector& b0) {
                    std::map<ExponentVector, int> hits;
                    for (const auto& part : splitInterval(iv, b0, g)) {
                        splitOk = splitOk && rho(part.high(), g) >= rho(b0, g);
                        forEachPoint(part, [&](const ExponentVector& c) { ++hits[c]; });
                    }
                    splitOk = splitOk && hits.size() == iv.pointCount() &&
                              std::all_of(hits.begin(), hits.end(),
                                          [&](const auto& e) { return e.second == 1 && iv.contains(e.first); });
                    ++splits;
                });
            }
    o.require(splitOk, "splitInterval");

    bool gsetOk = true;
    for (const auto& g : all(ev({2, 2, 2})))
        for (const auto& a : all(g))
            for (const auto& b : pointsOf(a, g)) {
                const Interval iv(a, b);
                std::map<ExponentVector, int> hits;
                for (const auto& c : gSet(iv, g)) {
                    ExponentVector top = c;
                    for (int j : zSet(b, g))
                        top.set(static_cast<std::size_t>(j), g[static_cast<std::size_t>(j)]);
                    forEachPoint(c, top, [&](const ExponentVector& d) { ++hits[d]; });
                }
                gsetOk = gsetOk && hits.size() == iv.pointCount() &&
                         std::all_of(hits.begin(), hits.end(),
                                     [&](const auto& e) { return e.second == 1 && iv.contains(e.first); });
            }
    o.require(gsetOk, "gSet");

    RandomInstances rnd(606);
    bool gInvariant = true;
    for (int k = 0; k < 50; ++k) {
        const std::size_t n = static_cast<std::size_t>(rnd.uniform(1, 3));
        const auto m = rnd.module(n, 2);
        const auto g = determineBound(m);
        gInvariant = gInvariant && hdepth(seriesOf(m, g)).value == hdepth(seriesOf(m, g + rnd.bound(n, 1))).value;
    }
    o.require(gInvariant, "g-enlargement");

    bool roundTrip = true;
    for (int k = 0; k < 200; ++k) {
        const auto g = rnd.bound(static_cast<std::size_t>(rnd.uniform(1, 3)), 2);
        const auto p = rnd.polynomial(g, 27, 3);
        const auto q = rnd.polynomial(g, 27, 2);
        roundTrip = roundTrip && subtractChecked(p + q, q) == p;
        try {
            roundTrip = roundTrip && subtractChecked(p, q) + q == p;
        } catch (const NegativityError& e) {
            roundTrip = roundTrip && q.coefficient(e.witness()) > p.coefficient(e.witness());
        }
    }
    o.require(roundTrip, "subtract/add");

    int annCases = 0;
    bool annOk = true;
    while (annCases < 200) {
        const std::size_t n = static_cast<std::size_t>(rnd.uniform(1, 3));
        auto [num, den] = rnd.quotient(n, 2);
        const QuotientModule q(num, den);
        for (const auto& [c, coeff] : q.series().terms()) {
            std::vector<int> members;
            for (std::size_t j = 0; j < n; ++j)
                if (rnd.uniform(0, 1))
                    members.push_back(static_cast<int>(j));
            const VariableSet z(n, members);
            const ExponentVector reach = den.generatorJoin() + q.bound();
            ExponentVector top = ExponentVector::zero(n);
            for (int j : z)
                top.set(static_cast<std::size_t>(j), reach[static_cast<std::size_t>(j)]);
            bool hit = false;
            forEachPoint(ExponentVector::zero(n), top, [&](const ExponentVector& u) { hit = hit || den.contains(c + u); });
            annOk = annOk && annihilatorIntersects(c, z, q) == hit;
            ++annCases;
        }
    }
    o.require(annOk, "annihilator saturation");

    if (o.pass)
        o.detail = std::to_string(splits) + " splits for g<=(3,3,3); gSet on g<=(2,2,2); 50 g-enlargements; "
                   "200 round trips; " + std::to_string(annCases) + " annihilator cases";
    return o;
}

Outcome fourMonomialGolden()
{
    Outcome o;
    const auto g = ev({1, 1});
    const auto p = fourMonomialSeries();
    o.require(findElementsToCover(g, 1, p) == std::vector{ev({0, 0})}, "elements to cover");
    const auto covers = findPossibleCovers(g, 1, p, ev({0, 0}));
    o.require(std::set<ExponentVector>(covers.begin(), covers.end()) == std::set{ev({1, 0}), ev({0, 1})} &&
                  covers.size() == 2,
              "possible covers");
    const auto at1 = checkHilbertDepth(g, 1, p);
    o.require(at1 && certifies(p, *at1, 1), "check at s=1");
    o.require(!checkHilbertDepth(g, 2, p), "check at s=2");
    if (o.pass)
        o.detail = "elements {(0,0)}, covers {(1,0),(0,1)}, s=1 true, s=2 false";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    bool longRun = false;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--long") == 0) {
            longRun = true;
        } else {
            std::cerr << "usage: acceptance [--long]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"maximal ideal formula", [&] { return maximalIdealFormula(longRun); }},
        {"R^2 (+) m in four variables", freeSquaredPlusMaximal},
        {"R (+) m in six variables", freePlusMaximalSix},
        {"Stanley layer", stanleyLayer},
        {"oracle equivalence", oracleEquivalence},
        {"property suites", propertySuites},
        {"four-monomial golden test", fourMonomialGolden},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.pass = false;
            o.detail = std::string("exception: ") + e.what();
        }
        failed += !o.pass;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << " (" << criteria[i].first
                  << "): " << o.detail << std::endl;
    }
    std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed" : "acceptance: all criteria pass")
              << std::endl;
    return failed ? 1 : 0;
}
