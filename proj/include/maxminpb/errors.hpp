#ifndef MAXMINPB_ERRORS_HPP
#define MAXMINPB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace maxminpb {

// Base for everything this library throws on purpose. Argument misuse still
// surfaces as std::invalid_argument / std::out_of_range from the stdlib.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Instance construction rejected (non-positive cost, unknown project in a
// vote, duplicate id, ...).
class ValidationError : public Error {
public:
    explicit ValidationError(const std::string& what) : Error(what) {}
};

// Dataset text could not be parsed; carries a 1-based line number when the
// failing line is known (0 otherwise).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Instance is larger than a hard size cap (brute-force project cap, axiom
// audit cap).
class SizeError : public Error {
public:
    explicit SizeError(const std::string& what) : Error(what) {}
};

// A configurable resource budget (DP state count, branch-and-bound node
// count) was exhausted mid-solve.
class ResourceLimitError : public Error {
public:
    explicit ResourceLimitError(const std::string& what) : Error(what) {}
};

// LP fixings admit no feasible point.
class InfeasibleError : public Error {
public:
    explicit InfeasibleError(const std::string& what) : Error(what) {}
};

} // namespace maxminpb

#endif
