#ifndef SWT_ERROR_HPP
#define SWT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace swt {

/// Truncated series of different orders were combined.
class OrderMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Operands live in different spaces (vector length, genus, symmetric power).
class DimensionMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Division by a series or matrix that is not invertible.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A chain complex whose differentials do not square to zero.
class InvalidComplex : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Presentation data failed validation; `what()` lists the violations.
class InvalidPresentation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal cross-check disagreed. Indicates a bug, never bad input.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace swt

#endif  // SWT_ERROR_HPP
