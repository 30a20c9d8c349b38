#include "slabqo/thermal.hpp"

#include <algorithm>
#include <cmath>

#include "slabqo/errors.hpp"

namespace slabqo {

ThermalEnvironment::ThermalEnvironment(double t) : theta(t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw InvalidArgument("ThermalEnvironment: theta must be >= 0");
}

double ThermalEnvironment::coherence_time() const {
  if (theta == 0.0) throw InvalidArgument("coherence_time: undefined at theta = 0");
  return 1.0 / theta;
}

double mean_thermal_photons(double omega, ThermalEnvironment env) {
  if (!(omega > 0.0)) throw InvalidArgument("mean_thermal_photons: omega must be > 0");
  if (env.theta == 0.0) return 0.0;
  // expm1 keeps full precision in the Rayleigh-Jeans corner omega << theta.
  return 1.0 / std::expm1(omega / env.theta);
}

double noise_second_moment(const ScatteringAmplitudes& amps, ThermalEnvironment env) {
  const double A = absorption(amps);
  return mean_thermal_photons(amps.omega, env) * std::max(A, 0.0);
}

}  // namespace slabqo
