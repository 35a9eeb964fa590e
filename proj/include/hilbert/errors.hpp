#ifndef HILBERT_ERRORS_HPP
#define HILBERT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace hilbert {

/// Two exponent vectors (or a vector and a bound) of different length met.
class DimensionMismatch : public std::invalid_argument
{
  public:
    DimensionMismatch(std::size_t lhs, std::size_t rhs)
        : std::invalid_argument("dimension mismatch: " + std::to_string(lhs) + " vs " + std::to_string(rhs))
    {
    }
};

/// An operation was called outside its domain (e.g. a point above the bound g).
class PreconditionError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// A search hit its node or time budget before reaching a verdict.
class LimitExceeded : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// The brute-force oracle refused an instance above its size cap.
class CapExceeded : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

} // namespace hilbert

#endif
