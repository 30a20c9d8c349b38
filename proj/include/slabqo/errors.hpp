#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace slabqo {

/// Argument outside the domain of an operation (negative frequency, N < 1, ...).
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Evaluation hit a pole of the model, e.g. a lossless Lorentz medium at resonance.
class SingularityError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A computed quantity violates a physical bound beyond round-off
/// (absorption outside [0, 1], negative variance, no photons at the detector).
class PhysicalityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Adaptive quadrature stopped at its subdivision limit; carries the best estimate.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, std::complex<double> estimate, double error_estimate)
      : std::runtime_error(what), estimate_(estimate), error_estimate_(error_estimate) {}

  std::complex<double> estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  std::complex<double> estimate_;
  double error_estimate_;
};

}  // namespace slabqo
