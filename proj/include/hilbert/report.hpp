#ifndef HILBERT_REPORT_HPP
#define HILBERT_REPORT_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hilbert/search.hpp"

namespace hilbert {

/// Certificate listing: one "[a ; b] xMULT" line per distinct interval, in
/// lexicographic order of (a, b). Endpoints are space-separated exponents.
std::string formatPartition(const HilbertPartition& pp);

/// Inverse of formatPartition. Blank lines and '#' comments are ignored.
HilbertPartition parsePartition(std::string_view text, const ExponentVector& bound);

/// One "shift=<monomial> vars={...}" line per space, sorted.
std::string formatDecomposition(const std::vector<DecompositionSpace>& spaces, const std::vector<std::string>& names);

enum class DepthKind { hilbert, stanley };

std::string_view toString(DepthKind k);

struct RunReport
{
    std::string command;
    DepthKind kind = DepthKind::hilbert;
    std::size_t dimension = 0;
    ExponentVector bound;
    int value = 0;
    /// Set by the check command: the tested depth and its verdict.
    std::optional<int> target;
    std::optional<bool> holds;
    std::optional<HilbertPartition> partition;
    std::optional<std::vector<DecompositionSpace>> decomposition;
    bool showStats = false;
    SearchStats stats;
    SearchConfig config;
    std::vector<std::string> warnings;
};

std::string renderText(const RunReport& r, const std::vector<std::string>& names);
std::string renderJson(const RunReport& r, const std::vector<std::string>& names);
std::string renderCsv(const RunReport& r);

} // namespace hilbert

#endif
