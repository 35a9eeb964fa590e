#include "hilbert/report.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <sstream>

#include "hilbert/problem.hpp"
#include "json.hpp"

namespace hilbert {

namespace {

std::string spaced(const ExponentVector& a)
{
    std::string s;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += (i ? " " : "") + std::to_string(a[i]);
    return s;
}

std::map<Interval, std::size_t> grouped(const HilbertPartition& pp)
{
    std::map<Interval, std::size_t> counts;
    for (const auto& iv : pp.parts())
        ++counts[iv];
    return counts;
}

std::string varList(const VariableSet& z, const std::vector<std::string>& names)
{
    std::string s = "{";
    bool first = true;
    for (int j : z) {
        const auto jj = static_cast<std::size_t>(j);
        s += (first ? "" : ",") + (jj < names.size() ? names[jj] : "X" + std::to_string(jj + 1));
        first = false;
    }
    return s + "}";
}

double seconds(std::chrono::nanoseconds d) { return std::chrono::duration<double>(d).count(); }

std::string headline(const RunReport& r)
{
    const std::string name = r.kind == DepthKind::hilbert ? "hdepth" : "sdepth";
    if (r.target)
        return name + " ≥ " + std::to_string(*r.target) + " : " + (r.holds.value_or(false) ? "true" : "false");
    return name + " = " + std::to_string(r.value);
}

} // namespace

std::string formatPartition(const HilbertPartition& pp)
{
    std::ostringstream os;
    for (const auto& [iv, mult] : grouped(pp))
        os << '[' << spaced(iv.low()) << " ; " << spaced(iv.high()) << "] x" << mult << '\n';
    return os.str();
}

HilbertPartition parsePartition(std::string_view text, const ExponentVector& bound)
{
    HilbertPartition pp(bound);
    std::istringstream in{std::string(text)};
    std::string line;
    int lineNo = 0;
    while (std::getline(in, line)) {
        ++lineNo;
        if (const auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); }))
            continue;
        const auto open = line.find('[');
        const auto semi = line.find(';');
        const auto close = line.find(']');
        if (open == std::string::npos || semi == std::string::npos || close == std::string::npos || semi < open ||
            close < semi)
            throw std::invalid_argument("partition line " + std::to_string(lineNo) + ": expected '[a ; b] xK'");
        auto readVector = [&](const std::string& s) {
            std::istringstream vs(s);
            std::vector<int> v;
            int x = 0;
            while (vs >> x)
                v.push_back(x);
            if (!vs.eof())
                throw std::invalid_argument("partition line " + std::to_string(lineNo) + ": bad exponent");
            return ExponentVector(std::move(v));
        };
        const ExponentVector low = readVector(line.substr(open + 1, semi - open - 1));
        const ExponentVector high = readVector(line.substr(semi + 1, close - semi - 1));
        std::size_t mult = 1;
        const std::string rest = line.substr(close + 1);
        if (const auto x = rest.find('x'); x != std::string::npos)
            mult = std::stoul(rest.substr(x + 1));
        for (std::size_t k = 0; k < mult; ++k)
            pp.add(Interval(low, high));
    }
    return pp;
}

std::string formatDecomposition(const std::vector<DecompositionSpace>& spaces, const std::vector<std::string>& names)
{
    std::vector<DecompositionSpace> sorted = spaces;
    std::sort(sorted.begin(), sorted.end());
    std::ostringstream os;
    for (const auto& sp : sorted)
        os << "shift=" << formatMonomial(sp.shift, names) << " vars=" << varList(sp.vars, names) << '\n';
    return os.str();
}

std::string_view toString(DepthKind k) { return k == DepthKind::hilbert ? "hilbert" : "stanley"; }

std::string renderText(const RunReport& r, const std::vector<std::string>& names)
{
    std::ostringstream os;
    os << headline(r) << '\n';
    auto indent = [&](const std::string& block) {
        std::istringstream in(block);
        std::string line;
        while (std::getline(in, line))
            os << "  " << line << '\n';
    };
    if (r.partition) {
        os << "partition:\n";
        indent(formatPartition(*r.partition));
    }
    if (r.decomposition) {
        os << "decomposition:\n";
        indent(formatDecomposition(*r.decomposition, names));
    }
    if (r.showStats) {
        os << "stats: nodes=" << r.stats.nodesVisited << " covers=" << r.stats.coversTried
           << " deadEnds=" << r.stats.deadEnds << " elapsed=" << std::fixed << std::setprecision(6)
           << seconds(r.stats.elapsed) << "s\n";
        os << "config: order=" << toString(r.config.elementOrder) << " cover-order=" << toString(r.config.coverOrder)
           << " strategy=" << (r.config.strategy == DepthStrategy::binary ? "binary" : "scan") << '\n';
    }
    return os.str();
}

std::string renderJson(const RunReport& r, const std::vector<std::string>& names)
{
    using nlohmann::json;
    json j;
    j["command"] = r.command;
    j["kind"] = std::string(toString(r.kind));
    j["dimension"] = r.dimension;
    j["variables"] = names;
    j["bound"] = r.bound.coords();
    j["value"] = r.value;
    if (r.target) {
        j["target"] = *r.target;
        j["holds"] = r.holds.value_or(false);
    }
    if (r.partition) {
        json parts = json::array();
        for (const auto& [iv, mult] : grouped(*r.partition))
            parts.push_back({{"low", iv.low().coords()}, {"high", iv.high().coords()}, {"multiplicity", mult}});
        j["partition"] = parts;
    }
    if (r.decomposition) {
        std::vector<DecompositionSpace> sorted = *r.decomposition;
        std::sort(sorted.begin(), sorted.end());
        json spaces = json::array();
        for (const auto& sp : sorted)
            spaces.push_back({{"shift", sp.shift.coords()}, {"vars", sp.vars.members()}});
        j["decomposition"] = spaces;
    }
    j["stats"] = {{"nodesVisited", r.stats.nodesVisited},
                  {"coversTried", r.stats.coversTried},
                  {"deadEnds", r.stats.deadEnds},
                  {"elapsedSeconds", seconds(r.stats.elapsed)}};
    json cfg = {{"order", std::string(toString(r.config.elementOrder))},
                {"coverOrder", std::string(toString(r.config.coverOrder))},
                {"strategy", r.config.strategy == DepthStrategy::binary ? "binary" : "scan"}};
    cfg["nodeLimit"] = r.config.nodeLimit ? json(*r.config.nodeLimit) : json(nullptr);
    cfg["timeoutSeconds"] =
        r.config.timeLimit ? json(std::chrono::duration<double>(*r.config.timeLimit).count()) : json(nullptr);
    j["config"] = cfg;
    j["warnings"] = r.warnings;
    return j.dump(2) + "\n";
}

std::string renderCsv(const RunReport& r)
{
    std::ostringstream os;
    os << "command,kind,value,target,holds,nodes,covers,dead_ends,elapsed_s\n";
    os << r.command << ',' << toString(r.kind) << ',' << r.value << ','
       << (r.target ? std::to_string(*r.target) : "") << ','
       << (r.holds ? (*r.holds ? "true" : "false") : "") << ',' << r.stats.nodesVisited << ','
       << r.stats.coversTried << ',' << r.stats.deadEnds << ',' << std::fixed << std::setprecision(6)
       << seconds(r.stats.elapsed) << '\n';
    return os.str();
}

} // namespace hilbert
