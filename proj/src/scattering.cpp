#include "slabqo/scattering.hpp"

#include <cmath>
#include <string>

#include "slabqo/errors.hpp"

namespace slabqo {

namespace {

constexpr complex kI{0.0, 1.0};

void require_positive_frequency(double omega, const char* what) {
  if (!(omega > 0.0) || !std::isfinite(omega)) {
    throw InvalidArgument(std::string(what) + ": omega must be positive and finite");
  }
}

// Shared pieces of the slab formulas. Every exponential below has a real part
// of -(k omega kappa l) with k >= 0, so nothing overflows for a passive slab;
// deep inside an absorption band the terms underflow towards their limits.
struct SlabTerms {
  complex n;
  complex round_trip;   // exp(4 i omega n l)
  complex denominator;  // (n+1)^2 - (n-1)^2 exp(4 i omega n l)
};

SlabTerms slab_terms(ComplexIndex index, double omega, SlabGeometry geom, const char* what) {
  require_positive_frequency(omega, what);
  const complex n = index.value();
  const double l = geom.half_thickness;
  const complex round_trip = std::exp(4.0 * kI * omega * n * l);
  const complex denominator = (n + 1.0) * (n + 1.0) - (n - 1.0) * (n - 1.0) * round_trip;
  if (std::abs(denominator) == 0.0 || !std::isfinite(std::abs(denominator))) {
    throw SingularityError(std::string(what) + ": degenerate slab denominator");
  }
  return {n, round_trip, denominator};
}

}  // namespace

SlabGeometry::SlabGeometry(double l) : half_thickness(l) {
  if (!(l > 0.0) || !std::isfinite(l)) throw InvalidArgument("SlabGeometry: half thickness must be > 0");
}

complex reflection_amplitude(ComplexIndex index, double omega, SlabGeometry geom) {
  const SlabTerms s = slab_terms(index, omega, geom, "reflection_amplitude");
  const double l = geom.half_thickness;
  return (s.n * s.n - 1.0) * std::exp(-2.0 * kI * omega * l) * (s.round_trip - 1.0) / s.denominator;
}

complex transmission_amplitude(ComplexIndex index, double omega, SlabGeometry geom) {
  const SlabTerms s = slab_terms(index, omega, geom, "transmission_amplitude");
  const double l = geom.half_thickness;
  return 4.0 * s.n * std::exp(2.0 * kI * omega * (s.n - 1.0) * l) / s.denominator;
}

NoiseModeCoefficients noise_mode_coefficients(ComplexIndex index, double omega, SlabGeometry geom) {
  const SlabTerms s = slab_terms(index, omega, geom, "noise_mode_coefficients");
  const double l = geom.half_thickness;
  const complex V = 2.0 * (s.n + 1.0) * std::exp(kI * omega * (s.n - 1.0) * l) / s.denominator;
  const complex W = 2.0 * (s.n - 1.0) * std::exp(kI * omega * (3.0 * s.n - 1.0) * l) / s.denominator;
  return {V, W};
}

double absorption(const ScatteringAmplitudes& amps) {
  const double A = 1.0 - std::norm(amps.R) - std::norm(amps.T);
  if (A < -kAbsorptionTolerance || A > 1.0 + kAbsorptionTolerance || std::isnan(A)) {
    throw PhysicalityError("absorption " + std::to_string(A) + " outside [0, 1] at omega = " +
                           std::to_string(amps.omega));
  }
  return A;
}

ScatteringAmplitudes scatter(ComplexIndex n, double omega, SlabGeometry geom) {
  ScatteringAmplitudes amps;
  amps.omega = omega;
  amps.R = reflection_amplitude(n, omega, geom);
  amps.T = transmission_amplitude(n, omega, geom);
  amps.A = absorption(amps);
  return amps;
}

double absorption_identity_residual(ComplexIndex index, double omega, SlabGeometry geom,
                                    double absolute_tolerance, double relative_tolerance) {
  const ScatteringAmplitudes amps = scatter(index, omega, geom);
  if (index.kappa < 0.0) throw InvalidArgument("absorption_identity_residual: kappa must be >= 0");

  const NoiseModeCoefficients vw = noise_mode_coefficients(index, omega, geom);
  const complex n = index.value();
  auto density = [&](double x) {
    const complex phase = kI * omega * n * x;
    return complex(std::norm(vw.V * std::exp(-phase) + vw.W * std::exp(phase)), 0.0);
  };

  numerics::QuadratureSpec spec;
  spec.absolute_tolerance = absolute_tolerance;
  spec.relative_tolerance = relative_tolerance;
  spec.domain = {-geom.half_thickness, geom.half_thickness};
  spec.initial_panels = 8;
  const double integral = numerics::integrate_or_throw(density, spec, "absorption identity").real();

  return std::abs(amps.A - 2.0 * omega * index.eta * index.kappa * integral);
}

ComplexIndex Slab::index(double omega) const {
  if (const auto* lorentz = std::get_if<LorentzParams>(&medium_)) {
    return refractive_index(*lorentz, omega);
  }
  return std::get<ComplexIndex>(medium_);
}

std::vector<double> Slab::features() const {
  if (const auto* lorentz = std::get_if<LorentzParams>(&medium_)) {
    const double w0 = lorentz->resonance_frequency;
    const double upper_edge = w0 * std::sqrt(1.0 + lorentz->plasma_ratio * lorentz->plasma_ratio);
    return {w0, upper_edge};
  }
  return {};
}

}  // namespace slabqo
