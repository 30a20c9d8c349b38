#include "slabqo/correlation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "slabqo/errors.hpp"
#include "slabqo/numerics.hpp"

namespace slabqo {

namespace {

constexpr complex kI{0.0, 1.0};
// x e^{-x} < 1e-14 beyond this many thermal energies.
constexpr double kBoseCutoff = 40.0;

int oscillation_panels(double t, double width) {
  const double phase_span = std::abs(t) * width;
  if (phase_span <= 10.0) return 1;
  return static_cast<int>(std::min(std::ceil(phase_span / std::numbers::pi), 50000.0));
}

const ComplexIndex& frozen_index(const Slab& slab) {
  const auto* n = std::get_if<ComplexIndex>(&slab.medium());
  if (n == nullptr) throw InvalidArgument("closed-form J2 needs a constant-index slab");
  return *n;
}

}  // namespace

IntegrationWindow j1_window(const GaussianSpectrum& spectrum) {
  const double half = spectrum.support_half_width();
  return {std::max(0.0, spectrum.central_frequency - half), spectrum.central_frequency + half};
}

IntegrationWindow j2_window(ThermalEnvironment env) { return {0.0, kBoseCutoff * env.theta}; }

complex j1(double t, const GaussianSpectrum& spectrum, const Slab& slab, const CorrelationSettings& settings) {
  const IntegrationWindow w = j1_window(spectrum);
  auto integrand = [&](double omega) {
    if (omega <= 0.0) return complex{};
    return std::exp(-kI * omega * t) * slab.amplitudes(omega).T * gaussian_spectrum_value(spectrum, omega);
  };
  numerics::QuadratureSpec q;
  q.domain = {w.lower, w.upper};
  q.relative_tolerance = settings.relative_tolerance;
  // |J1| <= int phi = (8 pi)^{1/4} / sqrt(L)
  q.absolute_tolerance = 1e-14 * std::pow(8.0 * std::numbers::pi, 0.25) / std::sqrt(spectrum.pulse_length);
  q.max_subdivisions = settings.max_subdivisions;
  q.breakpoints = {spectrum.central_frequency};
  q.initial_panels = oscillation_panels(t, w.upper - w.lower);
  return std::sqrt(settings.prefactor) * numerics::integrate_or_throw(integrand, q, "j1");
}

complex j2(double t, ThermalEnvironment env, const Slab& slab, const CorrelationSettings& settings) {
  if (env.theta == 0.0) return {};
  const IntegrationWindow w = j2_window(env);
  auto integrand = [&](double omega) {
    if (omega <= 0.0) return complex{};
    const double A = std::max(slab.amplitudes(omega).A, 0.0);
    return omega * mean_thermal_photons(omega, env) * A * std::exp(-kI * omega * t);
  };
  numerics::QuadratureSpec q;
  q.domain = {w.lower, w.upper};
  q.relative_tolerance = settings.relative_tolerance;
  // |J2| <= int omega nbar = theta^2 pi^2 / 6 since A <= 1.
  q.absolute_tolerance = 1e-13 * env.theta * env.theta * std::numbers::pi * std::numbers::pi / 6.0;
  q.max_subdivisions = settings.max_subdivisions;
  for (double f : slab.features()) {
    if (f < w.upper) q.breakpoints.push_back(f);
  }
  q.initial_panels = oscillation_panels(t, w.upper - w.lower);
  return settings.prefactor * numerics::integrate_or_throw(integrand, q, "j2");
}

complex i0(double t, double a, double b, ThermalEnvironment env, SlabGeometry geom) {
  if (!(a >= 0.0)) throw InvalidArgument("i0: a must be >= 0 (integral diverges)");
  if (!(env.theta > 0.0)) throw InvalidArgument("i0: theta must be > 0");
  const double l = geom.half_thickness;
  const complex s{a * l, -(b * l + t)};
  return l * l * numerics::trigamma_sum(s, 1.0 / env.theta);
}

double j1_sq_closed(double tau, const GaussianSpectrum& spectrum, ComplexIndex n_c, complex T_c, double prefactor) {
  const double L = spectrum.pulse_length;
  const double eta = n_c.eta;
  const double kappa = n_c.kappa;
  const double dispersion = (eta * eta - 1.0) * (eta * eta - 1.0);
  const double brace = L * L + 2.0 * L * L * dispersion -
                       4.0 * L * L * L * kappa * spectrum.central_frequency * dispersion * (eta * eta + 1.0) / eta;
  if (!(brace > 0.0)) {
    throw PhysicalityError("j1_sq_closed: non-positive spreading factor; outside the narrowband regime");
  }
  const double peak = prefactor * 2.0 * std::sqrt(2.0 * std::numbers::pi) * std::norm(T_c) / L;
  return peak * (L * L / brace) * std::exp(-2.0 * tau * tau / (L * L));
}

complex j2_closed(double t, ThermalEnvironment env, ComplexIndex n_c, SlabGeometry geom, double prefactor) {
  const double eta = n_c.eta;
  const double kappa = n_c.kappa;
  const double l = geom.half_thickness;
  const double mod2 = eta * eta + kappa * kappa;
  const double outer = (eta + 1.0) * (eta + 1.0) + kappa * kappa;
  auto I = [&](double a, double b) { return i0(-t, a, b, env, geom); };

  const complex bracket = eta * outer * I(0.0, 0.0) - 4.0 * mod2 * I(4.0 * kappa, 0.0) -
                          eta * (mod2 - 2.0 * eta + 1.0) * I(8.0 * kappa, 0.0) +
                          kI * kappa * (mod2 - 1.0) * (I(4.0 * kappa, eta) - I(4.0 * kappa, -eta)) +
                          2.0 * kappa * kappa * (I(4.0 * kappa, 4.0 * eta) + I(4.0 * kappa, -4.0 * eta));
  // hbar c / (pi eps0 sigma l^2) = 4 prefactor / l^2 with c = 1.
  return 4.0 * prefactor / (l * l) * bracket / (outer * outer);
}

double j2_sq_closed(double t, ThermalEnvironment env, ComplexIndex n_c, SlabGeometry geom, double prefactor) {
  return std::norm(j2_closed(t, env, n_c, geom, prefactor));
}

complex j2_value(double t, ThermalEnvironment env, const Slab& slab, const CorrelationSettings& settings) {
  if (env.theta == 0.0) return {};
  if (settings.j2_method == J2Method::closed) {
    return j2_closed(t, env, frozen_index(slab), slab.geometry(), settings.prefactor);
  }
  return j2(t, env, slab, settings);
}

CorrelationSweep::CorrelationSweep(double retarded_time, const SphereStateParams& state,
                                   const GaussianSpectrum& spectrum, ThermalEnvironment env, Slab slab,
                                   CorrelationSettings settings)
    : retarded_time_(retarded_time),
      spectrum_(spectrum),
      env_(env),
      slab_(std::move(slab)),
      settings_(settings) {
  continuum_normalization(state, spectrum_);  // validates the spectral reduction
  moments_ = photon_number_moments(SphereStateSums(state));
  j1_ref_ = moments_.mean > 0.0 ? j1(retarded_time_, spectrum_, slab_, settings_) : complex{};
  j2_zero_ = j2_value(0.0, env_, slab_, settings_).real();
}

CorrelationPoint CorrelationSweep::at(double tau) const {
  const double m1 = moments_.mean;
  const double m2 = moments_.second_factorial;
  const complex ja = j1_ref_;
  const complex jb = m1 > 0.0 ? j1(retarded_time_ + tau, spectrum_, slab_, settings_) : complex{};
  const complex j2t = j2_value(tau, env_, slab_, settings_);
  const double j20 = j2_zero_;
  const double ia = std::norm(ja);
  const double ib = std::norm(jb);

  const double numerator = m1 * j20 * (ia + ib) + m2 * ia * ib +
                           2.0 * m1 * (std::conj(ja) * jb * std::conj(j2t)).real() + std::norm(j2t) + j20 * j20;
  const double denominator = (j20 + m1 * ia) * (j20 + m1 * ib);
  if (!(denominator > 0.0)) {
    throw PhysicalityError("g2: no photons reach the detector (vanishing denominator)");
  }
  const double value = numerator / denominator;
  if (!(value >= -1e-12) || !std::isfinite(value)) {
    throw PhysicalityError("g2: non-physical value " + std::to_string(value));
  }
  return {retarded_time_, tau, std::max(value, 0.0)};
}

CorrelationPoint g2(double retarded_time, double tau, const SphereStateParams& state, const GaussianSpectrum& spectrum,
                    ThermalEnvironment env, const Slab& slab, const CorrelationSettings& settings) {
  return CorrelationSweep(retarded_time, state, spectrum, env, slab, settings).at(tau);
}

double g2_thermal_limit(double tau, ThermalEnvironment env, const Slab& slab, const CorrelationSettings& settings) {
  if (!(env.theta > 0.0)) throw InvalidArgument("g2_thermal_limit: theta must be > 0");
  const complex zero = j2_value(0.0, env, slab, settings);
  if (!(zero.real() > 0.0)) throw PhysicalityError("g2_thermal_limit: J2(0) vanishes (lossless slab)");
  const complex at_tau = tau == 0.0 ? zero : j2_value(tau, env, slab, settings);
  return 1.0 + std::norm(at_tau / zero);
}

}  // namespace slabqo
