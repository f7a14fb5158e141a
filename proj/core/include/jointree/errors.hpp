#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jointree {

/// Malformed or inconsistent input (bad file, unknown relation, violated precondition).
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Predicate text that does not parse. Carries the 1-based line number.
class ParseError : public InputError {
 public:
  ParseError(std::size_t line, const std::string& what)
      : InputError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// The input is well formed but outside the domain of the requested operation,
/// e.g. asking for the canonical tree of a hypergraph that is not Berge-acyclic.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An exponential routine was asked to run above its configured size guard.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Internal consistency check failed. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace jointree
