#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace halfspace {

/// Base for every numerical failure raised by the library. Contract
/// violations (bad arguments) use std::invalid_argument instead.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Evaluation at a pole, coincident points, or a zero complex distance.
class SingularityError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Argument outside the documented supported range of an approximation.
class UnsupportedDomainError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// An iterative or adaptive computation stopped before reaching its target
/// accuracy. The best estimate obtained so far is attached.
class AccuracyError : public NumericalError {
 public:
  AccuracyError(const std::string& what, std::complex<double> estimate, double achieved)
      : NumericalError(what), estimate_(estimate), achieved_(achieved) {}

  std::complex<double> estimate() const noexcept { return estimate_; }
  double achieved() const noexcept { return achieved_; }

 private:
  std::complex<double> estimate_;
  double achieved_;
};

/// Exponential fitting failed (repeated or vanishing characteristic roots).
class FitError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// H = 0 or an all-zero field: the EDoF ratio is 0/0.
class DegenerateChannelError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

/// Malformed or inconsistent user configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace halfspace
