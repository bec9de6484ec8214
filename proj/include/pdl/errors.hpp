#pragma once

#include <stdexcept>

namespace pdl {

// Input violates a structural precondition (shape, range, hermiticity).
class ValidationError : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// Operator is not positive semidefinite beyond numerical tolerance.
class PsdError : public ValidationError {
public:
  using ValidationError::ValidationError;
};

// Parameters lie outside the mathematical domain of a formula.
class DomainError : public std::domain_error {
public:
  using std::domain_error::domain_error;
};

// Request exceeds a configured size cap.
class ResourceLimitError : public std::length_error {
public:
  using std::length_error::length_error;
};

}  // namespace pdl
