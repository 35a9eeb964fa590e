#include "hilbert/cli.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "hilbert/problem.hpp"
#include "hilbert/stanley.hpp"
#include "json.hpp"

namespace hilbert::cli {

namespace {

constexpr double kDefaultTimeoutSeconds = 300.0;

struct Options
{
    std::string file;
    std::string order = "fewestCoversFirst";
    std::string coverOrder = "lexAsc";
    bool partition = false;
    bool decomposition = false;
    bool stats = false;
    double timeout = kDefaultTimeoutSeconds;
    std::uint64_t nodeLimit = 0;
    bool scan = false;
    std::string format = "text";
    int s = -1;
    std::string kind = "hilbert";
    std::string range;
};

/// Error carrying the exit code it maps to.
struct Failure
{
    int code;
    std::string message;
};

void addSharedFlags(CLI::App& cmd, Options& o)
{
    cmd.add_option("--order", o.order, "Element order")
        ->check(CLI::IsMember({"lexAsc", "lexDesc", "byRhoAsc", "fewestCoversFirst"}));
    cmd.add_option("--cover-order", o.coverOrder, "Cover order")
        ->check(CLI::IsMember({"lexAsc", "lexDesc", "smallestBoxFirst", "largestBoxFirst"}));
    cmd.add_flag("--partition", o.partition, "Print the Hilbert partition certificate");
    cmd.add_flag("--decomposition", o.decomposition, "Print the induced decomposition");
    cmd.add_flag("--stats", o.stats, "Print search statistics");
    cmd.add_option("--timeout", o.timeout, "Wall-clock limit in seconds")->check(CLI::PositiveNumber);
    cmd.add_option("--node-limit", o.nodeLimit, "Search node limit")->check(CLI::PositiveNumber);
    cmd.add_flag("--scan", o.scan, "Descending scan over s instead of binary search");
    cmd.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

SearchConfig configFrom(const Options& o)
{
    SearchConfig cfg;
    cfg.elementOrder = *parseElementOrder(o.order);
    cfg.coverOrder = *parseCoverOrder(o.coverOrder);
    if (o.nodeLimit > 0)
        cfg.nodeLimit = o.nodeLimit;
    cfg.timeLimit = std::chrono::milliseconds(static_cast<std::int64_t>(std::llround(o.timeout * 1000.0)));
    cfg.strategy = o.scan ? DepthStrategy::descendingScan : DepthStrategy::binary;
    return cfg;
}

ProblemFile loadProblem(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw Failure{kParseError, path + ": cannot read file"};
    std::stringstream buf;
    buf << in.rdbuf();
    try {
        return parseProblem(buf.str());
    } catch (const ParseError& e) {
        throw Failure{kParseError, path + ":" + e.what()};
    }
}

QuotientModule requireQuotient(const ProblemFile& p)
{
    const auto* m = std::get_if<ModuleExpr>(&p.target);
    if (m == nullptr)
        throw Failure{kInvalidRequest, "Stanley depth needs a module expression, not a raw series"};
    try {
        if (auto q = QuotientModule::fromModule(*m))
            return std::move(*q);
    } catch (const PreconditionError& e) {
        throw Failure{kInvalidRequest, e.what()};
    }
    throw Failure{kInvalidRequest, "Stanley depth needs a single unshifted quotient I/J (or R)"};
}

std::string render(const RunReport& r, const Options& o, const std::vector<std::string>& names)
{
    if (o.format == "json")
        return renderJson(r, names);
    if (o.format == "csv")
        return renderCsv(r);
    return renderText(r, names);
}

RunReport baseReport(const std::string& command, DepthKind kind, const ProblemFile& p, const Options& o)
{
    RunReport r;
    r.command = command;
    r.kind = kind;
    r.dimension = p.dimension();
    r.bound = p.bound();
    r.showStats = o.stats;
    r.config = configFrom(o);
    return r;
}

void attachHilbert(RunReport& r, const HilbertPartition& pp, const TruncatedSeries& h, const Options& o)
{
    if (!verifyPartition(h, pp))
        throw std::logic_error("certificate failed verification");
    if (o.partition)
        r.partition = pp;
    if (o.decomposition)
        r.decomposition = renderDecomposition(pp, h.bound()).spaces;
}

void attachStanley(RunReport& r, const StanleyDecomposition& d, const HilbertPartition* pp, const QuotientModule& q,
                   const Options& o)
{
    if (!verifyStanleyDecomposition(q, d))
        throw std::logic_error("Stanley certificate failed verification");
    if (o.partition && pp != nullptr)
        r.partition = *pp;
    if (o.decomposition)
        r.decomposition = d.spaces;
}

int runDepth(const Options& o, DepthKind kind, std::ostream& out, std::ostream& err)
{
    const ProblemFile p = loadProblem(o.file);
    const SearchConfig cfg = configFrom(o);
    RunReport r = baseReport(kind == DepthKind::hilbert ? "hdepth" : "sdepth", kind, p, o);
    if (kind == DepthKind::hilbert) {
        const TruncatedSeries h = p.series();
        if (h.isZero())
            r.warnings.push_back("zero module: depth reported as n by convention");
        DepthResult res = hdepth(h, cfg);
        r.value = res.value;
        r.stats = res.stats;
        attachHilbert(r, res.certificate, h, o);
    } else {
        const QuotientModule q = requireQuotient(p);
        if (q.series().isZero())
            r.warnings.push_back("zero module: depth reported as n by convention");
        StanleyDepthResult res = sdepth(q, cfg);
        r.value = res.value;
        r.stats = res.stats;
        attachStanley(r, res.certificate, &res.partition, q, o);
    }
    for (const auto& w : r.warnings)
        err << "warning: " << w << '\n';
    out << render(r, o, p.variableNames);
    return kSuccess;
}

int runCheck(const Options& o, std::ostream& out, std::ostream& err)
{
    const ProblemFile p = loadProblem(o.file);
    if (o.s < 0 || static_cast<std::size_t>(o.s) > p.dimension())
        throw Failure{kInvalidRequest, "--s must lie in [0, " + std::to_string(p.dimension()) + "]"};
    const SearchConfig cfg = configFrom(o);
    const DepthKind kind = o.kind == "stanley" ? DepthKind::stanley : DepthKind::hilbert;
    RunReport r = baseReport("check", kind, p, o);
    r.target = o.s;
    if (kind == DepthKind::hilbert) {
        const TruncatedSeries h = p.series();
        auto pp = checkHilbertDepth(h.bound(), o.s, h, cfg, &r.stats);
        r.holds = pp.has_value();
        if (pp)
            attachHilbert(r, *pp, h, o);
    } else {
        const QuotientModule q = requireQuotient(p);
        auto d = checkStanleyDepth(q, o.s, cfg, &r.stats);
        r.holds = d.has_value();
        if (d)
            attachStanley(r, *d, nullptr, q, o);
    }
    r.value = *r.holds ? o.s : 0;
    for (const auto& w : r.warnings)
        err << "warning: " << w << '\n';
    out << render(r, o, p.variableNames);
    return kSuccess;
}

int runBench(const Options& o, std::ostream& out)
{
    const auto dots = o.range.find("..");
    int lo = 0;
    int hi = 0;
    try {
        if (dots == std::string::npos)
            throw std::invalid_argument("no '..'");
        lo = std::stoi(o.range.substr(0, dots));
        hi = std::stoi(o.range.substr(dots + 2));
    } catch (const std::exception&) {
        throw Failure{kInvalidRequest, "--maxideal expects A..B"};
    }
    if (lo < 2 || lo > hi)
        throw Failure{kInvalidRequest, "--maxideal needs 2 <= A <= B"};

    const DepthKind kind = o.kind == "stanley" ? DepthKind::stanley : DepthKind::hilbert;
    const auto rows = benchMaxIdeal(lo, hi, kind, configFrom(o));
    bool limited = false;
    bool mismatch = false;
    auto status = [](const BenchRow& row) {
        return row.limitExceeded ? "limit" : (row.value == row.expected ? "ok" : "MISMATCH");
    };
    for (const auto& row : rows) {
        limited = limited || row.limitExceeded;
        mismatch = mismatch || (!row.limitExceeded && row.value != row.expected);
    }

    if (o.format == "json") {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& row : rows)
            j.push_back({{"n", row.n},
                         {"kind", std::string(toString(kind))},
                         {"value", row.limitExceeded ? nlohmann::json(nullptr) : nlohmann::json(row.value)},
                         {"expected", row.expected},
                         {"elapsedSeconds", std::chrono::duration<double>(row.stats.elapsed).count()},
                         {"nodesVisited", row.stats.nodesVisited},
                         {"status", status(row)}});
        out << j.dump(2) << '\n';
    } else if (o.format == "csv") {
        out << "n,kind,value,expected,elapsed_s,nodes,status\n";
        for (const auto& row : rows)
            out << row.n << ',' << toString(kind) << ',' << (row.limitExceeded ? "" : std::to_string(row.value))
                << ',' << row.expected << ',' << std::fixed << std::setprecision(6)
                << std::chrono::duration<double>(row.stats.elapsed).count() << ',' << row.stats.nodesVisited << ','
                << status(row) << '\n';
    } else {
        out << std::left << std::setw(4) << "n" << std::setw(7) << "value" << std::setw(10) << "expected"
            << std::setw(13) << "elapsed_s" << std::setw(10) << "nodes" << "status\n";
        for (const auto& row : rows)
            out << std::left << std::setw(4) << row.n << std::setw(7)
                << (row.limitExceeded ? "-" : std::to_string(row.value)) << std::setw(10) << row.expected
                << std::setw(13) << std::fixed << std::setprecision(6)
                << std::chrono::duration<double>(row.stats.elapsed).count() << std::setw(10)
                << row.stats.nodesVisited << status(row) << '\n';
    }
    if (mismatch)
        return kInvalidRequest;
    return limited ? kLimitExceeded : kSuccess;
}

} // namespace

std::vector<BenchRow> benchMaxIdeal(int nMin, int nMax, DepthKind kind, const SearchConfig& cfg)
{
    if (nMin < 2 || nMin > nMax)
        throw PreconditionError("benchmark range needs 2 <= nMin <= nMax");
    std::vector<BenchRow> rows;
    for (int n = nMin; n <= nMax; ++n) {
        BenchRow row;
        row.n = n;
        row.expected = (n + 1) / 2;
        const auto dim = static_cast<std::size_t>(n);
        try {
            if (kind == DepthKind::hilbert) {
                ModuleExpr m(dim);
                m.addIdeal(MonomialIdeal::maximal(dim));
                const DepthResult r = hdepth(m, cfg);
                row.value = r.value;
                row.stats = r.stats;
            } else {
                const QuotientModule q(MonomialIdeal::maximal(dim), MonomialIdeal::zero(dim));
                const StanleyDepthResult r = sdepth(q, cfg);
                row.value = r.value;
                row.stats = r.stats;
            }
        } catch (const LimitExceeded&) {
            row.limitExceeded = true;
        }
        rows.push_back(row);
    }
    return rows;
}

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Multigraded Hilbert depth and Stanley depth by interval-partition search", "hilbertdepth"};
    app.require_subcommand(1);
    Options o;

    auto* hd = app.add_subcommand("hdepth", "Hilbert depth of a module or raw series");
    hd->add_option("FILE", o.file, "Problem file")->required();
    addSharedFlags(*hd, o);

    auto* sd = app.add_subcommand("sdepth", "Stanley depth of a quotient I/J");
    sd->add_option("FILE", o.file, "Problem file")->required();
    addSharedFlags(*sd, o);

    auto* ck = app.add_subcommand("check", "Decide depth >= s");
    ck->add_option("FILE", o.file, "Problem file")->required();
    ck->add_option("--s", o.s, "Depth to test")->required();
    ck->add_option("--kind", o.kind, "hilbert or stanley")->check(CLI::IsMember({"hilbert", "stanley"}));
    addSharedFlags(*ck, o);

    auto* bn = app.add_subcommand("bench", "Maximal-ideal benchmark");
    bn->add_option("--maxideal", o.range, "Range A..B of variable counts")->required();
    bn->add_option("--kind", o.kind, "hilbert or stanley")->check(CLI::IsMember({"hilbert", "stanley"}));
    addSharedFlags(*bn, o);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInvalidRequest;
    }

    try {
        if (*hd)
            return runDepth(o, DepthKind::hilbert, out, err);
        if (*sd)
            return runDepth(o, DepthKind::stanley, out, err);
        if (*ck)
            return runCheck(o, out, err);
        return runBench(o, out);
    } catch (const Failure& f) {
        err << "error: " << f.message << '\n';
        return f.code;
    } catch (const LimitExceeded& e) {
        err << "error: " << e.what() << '\n';
        return kLimitExceeded;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInvalidRequest;
    }
}

} // namespace hilbert::cli
