#pragma once

#include <stdexcept>
#include <string>

namespace gusvd {

// Bad input: malformed documents, non-prime characteristic, wrong shapes.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class DivisionByZero : public DomainError {
 public:
  DivisionByZero() : DomainError("division by zero in finite field") {}
};

// Operation-specific precondition (non-nilpotent input, singular form, ...).
class PreconditionError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Internal consistency failure; should be unreachable for valid input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Enumeration budget exceeded.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace gusvd
