#pragma once

#include <stdexcept>
#include <string>

namespace freewalk {

// Invalid arguments: bad generator index, non-reduced ray, negative radius, ...
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// A string (word, ray, rational, subset spec) failed to parse.
class ParseError : public DomainError {
 public:
  using DomainError::DomainError;
};

// An enumeration would exceed the configured word budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A function provider could not be evaluated at a required point.
class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A normalising mass vanished (unreachable set, zero Green mass, too shallow witness).
class DegenerateError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace freewalk
