#pragma once

#include "slabqo/scattering.hpp"

namespace slabqo {

/// Slab temperature in units of hbar omega_ref / k_B.
struct ThermalEnvironment {
  double theta = 0.0;

  ThermalEnvironment() = default;
  explicit ThermalEnvironment(double theta);

  /// Thermal coherence time hbar / (k_B theta) in units of 1 / omega_ref.
  double coherence_time() const;
};

/// Bose occupation 1 / (exp(omega / theta) - 1); exactly 0 at theta = 0.
double mean_thermal_photons(double omega, ThermalEnvironment env);

/// <F^dagger F> = nbar(omega, theta) (1 - |R|^2 - |T|^2).
double noise_second_moment(const ScatteringAmplitudes& amps, ThermalEnvironment env);

}  // namespace slabqo
