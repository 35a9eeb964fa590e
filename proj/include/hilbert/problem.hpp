#ifndef HILBERT_PROBLEM_HPP
#define HILBERT_PROBLEM_HPP

// Text format for depth problems.
//
//   # comment
//   vars = x y z
//   I = ideal(x^2*y, z)
//   J = 0
//   M = R^2 (+) I (+) quot(I, J) (+) shift(R; 1 0 0)
//
// or, in raw mode, an explicit bound and truncated series:
//
//   vars = x y
//   g = 1 1
//   series = 1 + 2*x + 2*y + 2*x*y
//
// Statements end at a newline or a top-level ';'.

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "hilbert/series.hpp"

namespace hilbert {

class ParseError : public std::runtime_error
{
  public:
    ParseError(const std::string& message, int line, int column);
    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }

  private:
    int line_;
    int column_;
};

/// Explicit (g, H_{≼g}) pair.
struct RawSeries
{
    TruncatedSeries series;
    friend bool operator==(const RawSeries&, const RawSeries&) = default;
};

struct ProblemFile
{
    std::vector<std::string> variableNames;
    std::vector<std::pair<std::string, MonomialIdeal>> bindings;
    std::variant<ModuleExpr, RawSeries> target;

    std::size_t dimension() const noexcept { return variableNames.size(); }
    bool isRaw() const noexcept { return std::holds_alternative<RawSeries>(target); }
    /// g: explicit in raw mode, determineBound otherwise.
    ExponentVector bound() const;
    TruncatedSeries series() const;
};

ProblemFile parseProblem(std::string_view text);

/// Prints p in the format parseProblem accepts.
std::string printProblem(const ProblemFile& p);

/// "x^2*y", or "1" for the zero exponent.
std::string formatMonomial(const ExponentVector& a, const std::vector<std::string>& names);

} // namespace hilbert

#endif
