#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace jetspec {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
public:
  using Error::Error;
};

// Numerical failures: the inputs were admissible but the computation broke down.
class NumericError : public Error {
public:
  using Error::Error;
};

class SingularMatrix : public NumericError {
public:
  SingularMatrix(const std::string& what, std::size_t pivot, double singular_value)
      : NumericError(what), pivot_(pivot), singular_value_(singular_value) {}

  // Column at which elimination found no pivot (exact backend).
  std::size_t pivot() const noexcept { return pivot_; }
  // Offending smallest singular value (float backend); 0 for exact.
  double singular_value() const noexcept { return singular_value_; }

private:
  std::size_t pivot_;
  double singular_value_;
};

class ConvergenceFailure : public NumericError {
public:
  using NumericError::NumericError;
};

class DegreeExceedsOrder : public NumericError {
public:
  DegreeExceedsOrder(const std::string& what, int n_max) : NumericError(what), n_max_(n_max) {}
  int n_max() const noexcept { return n_max_; }

private:
  int n_max_;
};

// Two eigenvalue images closer than the clustering radius but not equal.
class EigenvalueCollision : public NumericError {
public:
  using NumericError::NumericError;
};

// The caller asked for something outside an operation's domain.
class PreconditionViolation : public Error {
public:
  using Error::Error;
};

class PoleError : public PreconditionViolation {
public:
  using PreconditionViolation::PreconditionViolation;
};

class ContourError : public PreconditionViolation {
public:
  using PreconditionViolation::PreconditionViolation;
};

}  // namespace jetspec
