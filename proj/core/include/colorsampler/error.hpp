#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace colorsampler {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input. `line()` is 1-based; 0 means "no specific line".
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line)
      : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An exhaustive computation would exceed its configured budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// Parameters are outside the regime an operation supports (for example k < Δ+2).
class ConfigError : public Error {
 public:
  using Error::Error;
};

/// A structural property that must hold by construction was observed to fail.
class InvariantViolation : public Error {
 public:
  using Error::Error;
};

}  // namespace colorsampler
