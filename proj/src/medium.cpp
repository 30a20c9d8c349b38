#include "slabqo/medium.hpp"

#include <cmath>

#include "slabqo/errors.hpp"

namespace slabqo {

LorentzParams::LorentzParams(double resonance, double plasma, double damping)
    : resonance_frequency(resonance), plasma_ratio(plasma), damping_ratio(damping) {
  if (!(resonance > 0.0) || !std::isfinite(resonance)) {
    throw InvalidArgument("LorentzParams: resonance frequency must be positive");
  }
  if (!(plasma >= 0.0) || !(damping >= 0.0)) {
    throw InvalidArgument("LorentzParams: plasma and damping ratios must be >= 0");
  }
}

complex permittivity(const LorentzParams& params, double omega) {
  if (!(omega >= 0.0)) throw InvalidArgument("permittivity: omega must be >= 0");
  if (std::isinf(omega)) return {1.0, 0.0};

  const double x = omega / params.resonance_frequency;
  const complex denominator{1.0 - x * x, -params.damping_ratio * x};
  if (denominator == complex{}) {
    throw SingularityError("permittivity: lossless Lorentz medium evaluated at its resonance");
  }
  return 1.0 + params.plasma_ratio * params.plasma_ratio / denominator;
}

ComplexIndex principal_index(complex eps) {
  complex n = std::sqrt(eps);
  // std::sqrt honours the sign of a zero imaginary part; force the passive branch.
  if (n.imag() < 0.0 || (n.imag() == 0.0 && n.real() < 0.0)) n = -n;
  if (n.real() == 0.0) n = {0.0, n.imag()};
  return ComplexIndex::from(n);
}

ComplexIndex refractive_index(const LorentzParams& params, double omega) {
  return principal_index(permittivity(params, omega));
}

double frequency_for_extinction(const LorentzParams& params, double kappa, double lower, double upper) {
  auto residual = [&](double w) { return refractive_index(params, w).kappa - kappa; };
  double f_lo = residual(lower);
  const double f_hi = residual(upper);
  if (f_lo * f_hi > 0.0) {
    throw InvalidArgument("frequency_for_extinction: extinction coefficient not bracketed");
  }
  for (int it = 0; it < 200 && upper - lower > 1e-15 * upper; ++it) {
    const double mid = 0.5 * (lower + upper);
    const double f_mid = residual(mid);
    if ((f_mid < 0.0) == (f_lo < 0.0)) {
      lower = mid;
      f_lo = f_mid;
    } else {
      upper = mid;
    }
  }
  return 0.5 * (lower + upper);
}

}  // namespace slabqo
