#pragma once

#include <stdexcept>

namespace ccqed {

/// A physically meaningless argument (nonpositive frequency, negative
/// dipole magnitude, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// API misuse: the call itself is wrong (wrong orientation variant for an
/// operation, state index out of range, empty grid, ...).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Well-formed input that violates a physical invariant or a file schema.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Numerical failure, e.g. an iterative solver that did not converge.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace ccqed
