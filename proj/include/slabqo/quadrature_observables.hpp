#pragma once

#include "slabqo/scattering.hpp"
#include "slabqo/states.hpp"
#include "slabqo/thermal.hpp"

namespace slabqo {

/// The transmitted channel at one probe frequency: b = T a + R v + F with
/// <F^dagger F> = noise. This is how the single-mode observables are swept over omega.
struct Channel {
  ScatteringAmplitudes amplitudes{};
  double noise = 0.0;

  complex T() const { return amplitudes.T; }
};

Channel channel_at(const Slab& slab, ThermalEnvironment env, double omega);

enum class Quadrature { x, y };

/// Closed-form variance of the transmitted quadrature X = (b + b^dagger)/2
/// (or Y = (b - b^dagger)/2i) for the sphere coherent state at the input.
double quadrature_variance_closed(const SphereStateParams& state, complex T, double noise,
                                  Quadrature quadrature = Quadrature::x);

/// S = 4 variance - 1; negative means squeezing below the vacuum level.
double squeezing_parameter(double variance);

/// Closed-form Mandel Q of the transmitted photon number.
double mandel_q_closed(const SphereStateParams& state, complex T, double noise);

/// First and second moments of the transmitted mode.
struct OutputMoments {
  double mean_photon = 0.0;      ///< <n>
  double photon_second = 0.0;    ///< <n^2>
  double x_mean = 0.0;
  double y_mean = 0.0;
  double x_second = 0.0;         ///< <X^2>
  double y_second = 0.0;         ///< <Y^2>

  double x_variance() const { return x_second - x_mean * x_mean; }
  double y_variance() const { return y_second - y_mean * y_mean; }
  double mandel_q() const;
};

/// Moments assembled from the Fock-space coefficients by explicit ladder-operator
/// action, with Gaussian (thermal) statistics for the noise operator. Independent
/// of the closed forms above, which it is used to validate.
OutputMoments output_moments_oracle(const SphereStateParams& state, complex T, double noise);

}  // namespace slabqo
