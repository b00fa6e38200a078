#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cyclespec {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed graph text. `line()` is 1-based; 0 when no line applies.
class ParseError : public Error {
public:
    ParseError(std::size_t line, const std::string& what)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Bad arguments (vertex out of range, k < 2, trivial partition, ...).
class InvalidArgument : public Error {
public:
    using Error::Error;
};

/// The input falls outside a construction's proven hypotheses.
class HypothesisNotMet : public Error {
public:
    using Error::Error;
};

class NotBipartite : public Error {
public:
    using Error::Error;
};

/// A step that is proven to succeed has failed. Always a bug.
class InternalContradiction : public Error {
public:
    using Error::Error;
};

/// Oracle work exceeded its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

}  // namespace cyclespec
