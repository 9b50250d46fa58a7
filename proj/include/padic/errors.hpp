#pragma once

#include <stdexcept>
#include <string>

namespace padic {

// Operand outside the mathematical domain of an operation
// (zero divisor, non-unit where a unit is required, p <= 3, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// A result cannot be determined at the tracked precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A rational map hit a vanishing denominator.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// The caller's input does not satisfy the hypotheses of a lifting
// or proportionality argument.
class HypothesisError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Requested enumeration or precision exceeds the configured budget.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent computations that must agree did not.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace padic
