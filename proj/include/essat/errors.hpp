#pragma once

#include <stdexcept>
#include <string>

namespace essat {

// Input violates the genericity the caller asked for (collinear triple,
// repeated x-coordinate, duplicate point).
class NonGenericError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed point-set, sequence, or coloring file.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what : what),
        line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// A brute-force or enumeration size guard was hit.
class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An operation's precondition does not hold for the given input.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Every label of the lattice already occurs: the coloring is extremal.
class NoMissingLabel : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// The placement search ran out of halvings; `property` names the last check
// that failed.
class RetryBudgetExhausted : public std::runtime_error {
 public:
  RetryBudgetExhausted(const std::string& property, int attempts)
      : std::runtime_error("retry budget exhausted after " + std::to_string(attempts) +
                           " attempts; last failing property: " + property),
        property_(property) {}
  const std::string& property() const { return property_; }

 private:
  std::string property_;
};

}  // namespace essat
