#pragma once

#include <complex>

namespace slabqo {

using complex = std::complex<double>;

/// Single-resonance Lorentz dielectric. Frequencies are dimensionless,
/// measured in the run's reference unit; `resonance_frequency` is the
/// resonance expressed in that unit (1 when the reference is the resonance).
struct LorentzParams {
  double resonance_frequency = 1.0;
  double plasma_ratio = 0.0;   ///< omega_p / omega_0
  double damping_ratio = 0.0;  ///< gamma / omega_0

  LorentzParams() = default;
  /// Throws InvalidArgument for negative ratios or a non-positive resonance.
  LorentzParams(double resonance_frequency, double plasma_ratio, double damping_ratio);
};

/// Complex refractive index n = eta + i kappa on the passive branch (kappa >= 0).
struct ComplexIndex {
  double eta = 1.0;
  double kappa = 0.0;

  complex value() const { return {eta, kappa}; }
  static ComplexIndex from(complex n) { return {n.real(), n.imag()}; }
};

/// eps(w) = 1 + (wp/w0)^2 / (1 - x^2 - i (gamma/w0) x), x = omega / resonance_frequency.
/// Throws InvalidArgument for omega < 0 and SingularityError at the lossless pole.
complex permittivity(const LorentzParams& params, double omega);

/// Square root of eps with the sign chosen so that Im n >= 0.
ComplexIndex principal_index(complex eps);

ComplexIndex refractive_index(const LorentzParams& params, double omega);

/// Frequency in (lower, upper) where kappa(omega) equals `kappa`, by bisection.
/// kappa must be bracketed on the interval; throws InvalidArgument otherwise.
double frequency_for_extinction(const LorentzParams& params, double kappa, double lower, double upper);

}  // namespace slabqo
