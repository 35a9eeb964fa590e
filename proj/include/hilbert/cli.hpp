#ifndef HILBERT_CLI_HPP
#define HILBERT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "hilbert/report.hpp"
#include "hilbert/search.hpp"

namespace hilbert::cli {

enum ExitCode : int { kSuccess = 0, kParseError = 1, kInvalidRequest = 2, kLimitExceeded = 3 };

struct BenchRow
{
    int n = 0;
    int value = -1;
    int expected = 0;
    SearchStats stats;
    bool limitExceeded = false;
};

/// Depth of the maximal ideal of K[X_1..X_n] for each n in [nMin, nMax].
std::vector<BenchRow> benchMaxIdeal(int nMin, int nMax, DepthKind kind, const SearchConfig& cfg);

/// Runs one command line (without the program name). Reports go to out,
/// diagnostics to err; the return value is the process exit code.
int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace hilbert::cli

#endif
