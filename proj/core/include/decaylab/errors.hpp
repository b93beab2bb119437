#pragma once

#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace decaylab {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (boundary pole, t <= 0 for a
/// Laplace representation, lambda outside the support, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Operation requires the other kind of support (full line vs half line).
class WrongSupportError : public Error {
 public:
  using Error::Error;
};

/// Operation requires a different coupling profile kind.
class WrongModelError : public Error {
 public:
  using Error::Error;
};

/// Quadrature, root finding or eigensolver failure.
class NumericError : public Error {
 public:
  using Error::Error;
};

/// Evaluation at (or numerically on top of) a pole of an analytic continuation.
class PoleError : public NumericError {
 public:
  PoleError(const std::string& what, std::complex<double> location)
      : NumericError(what), location_(location) {}
  std::complex<double> location() const noexcept { return location_; }

 private:
  std::complex<double> location_;
};

class DegenerateRootError : public NumericError {
 public:
  using NumericError::NumericError;
};

class BracketExhaustedError : public NumericError {
 public:
  using NumericError::NumericError;
};

/// The requested time horizon cannot be resolved with the configured budget.
class ResolutionError : public NumericError {
 public:
  ResolutionError(const std::string& what, double achievable_horizon)
      : NumericError(what), horizon_(achievable_horizon) {}
  double achievable_horizon() const noexcept { return horizon_; }

 private:
  double horizon_;
};

class InsufficientDataError : public Error {
 public:
  using Error::Error;
};

/// A model or run configuration failed validation.
class ValidationError : public Error {
 public:
  explicit ValidationError(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const noexcept { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

}  // namespace decaylab
