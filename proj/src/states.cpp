#include "slabqo/states.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "slabqo/errors.hpp"
#include "slabqo/numerics.hpp"

namespace slabqo {

namespace {

void check_range(int n, int upper, const char* what) {
  if (n < 0 || n > upper) throw InvalidArgument(std::string(what) + ": n out of range");
}

double curvature_offset(double lambda) { return std::sqrt(1.0 + 0.25 * lambda * lambda); }

// ln g(lambda, n)
double log_sphere_deformation(double lambda, int n, int N) {
  const double s = curvature_offset(lambda);
  return 0.5 * (std::log(lambda * (N + 1 - n) + s) + std::log(lambda * n + s));
}

}  // namespace

SphereStateParams::SphereStateParams(double lambda_, int N_, complex Z_) : lambda(lambda_), N(N_), Z(Z_) {
  if (N < 1) throw InvalidArgument("SphereStateParams: N must be >= 1");
  if (!(lambda >= 0.0) || !std::isfinite(lambda)) throw InvalidArgument("SphereStateParams: lambda must be >= 0");
  if (!std::isfinite(Z.real()) || !std::isfinite(Z.imag())) throw InvalidArgument("SphereStateParams: Z must be finite");
}

double flat_deformation(int n, int N) {
  check_range(n, N + 1, "flat_deformation");
  return std::sqrt(static_cast<double>(N + 1 - n));
}

double sphere_deformation(double lambda, int n, int N) {
  check_range(n, N, "sphere_deformation");
  if (!(lambda >= 0.0)) throw InvalidArgument("sphere_deformation: lambda must be >= 0");
  const double s = curvature_offset(lambda);
  return std::sqrt((lambda * (N + 1 - n) + s) * (lambda * n + s));
}

LogValue g_factorial(double lambda, int n, int N) {
  check_range(n, N, "g_factorial");
  if (!(lambda >= 0.0)) throw InvalidArgument("g_factorial: lambda must be >= 0");
  double acc = 0.0;
  for (int k = 1; k <= n; ++k) acc += log_sphere_deformation(lambda, k, N);
  return {acc, std::exp(acc)};
}

SphereStateSums::SphereStateSums(const SphereStateParams& params, double weight_scale) : N_(params.N) {
  if (!(weight_scale >= 0.0)) throw InvalidArgument("SphereStateSums: weight scale must be >= 0");
  const double abs_z = std::abs(params.Z) * std::sqrt(weight_scale);
  log_abs_z_ = abs_z > 0.0 ? std::log(abs_z) : -numerics::kInfinity;

  half_log_amp_.resize(N_ + 1);
  double log_gf = 0.0;
  for (int n = 0; n <= N_; ++n) {
    if (n > 0) log_gf += log_sphere_deformation(params.lambda, n, N_);
    half_log_amp_[n] = 0.5 * numerics::log_binomial(N_, n) + log_gf;
  }

  std::vector<double> terms(N_ + 1);
  for (int n = 0; n <= N_; ++n) terms[n] = 2.0 * half_log_amp_[n] + log_abs_z_power(2 * n);
  log_norm_ = numerics::log_sum_exp(terms);
}

double SphereStateSums::half_log_amplitude(int n) const {
  if (n < 0 || n > N_) return -numerics::kInfinity;
  return half_log_amp_[n];
}

double SphereStateSums::log_abs_z_power(int power) const {
  return power == 0 ? 0.0 : power * log_abs_z_;
}

double SphereStateSums::probability(int n) const {
  return std::exp(2.0 * half_log_amplitude(n) + log_abs_z_power(2 * n) - log_norm_);
}

FockCoefficients scs_coefficients(const SphereStateParams& params) {
  const SphereStateSums sums(params);
  const double phase = std::arg(params.Z);
  FockCoefficients out;
  out.c.resize(params.N + 1);
  for (int n = 0; n <= params.N; ++n) {
    const double magnitude = std::exp(sums.half_log_amplitude(n) + sums.log_abs_z_power(n) - 0.5 * sums.log_norm());
    out.c[n] = std::polar(magnitude, n * phase);
  }
  return out;
}

double input_state_moment(const FockCoefficients& coeffs, int order) {
  if (order != 1 && order != 2) throw InvalidArgument("input_state_moment: order must be 1 or 2");
  double acc = 0.0;
  for (std::size_t n = 0; n < coeffs.c.size(); ++n) {
    const double weight = std::norm(coeffs.c[n]);
    acc += (order == 1 ? n : static_cast<double>(n * n)) * weight;
  }
  return acc;
}

GaussianSpectrum::GaussianSpectrum(double L, double wc) : pulse_length(L), central_frequency(wc) {
  if (!(L > 0.0) || !std::isfinite(L)) throw InvalidArgument("GaussianSpectrum: pulse length must be > 0");
  if (!(wc > 0.0) || !std::isfinite(wc)) throw InvalidArgument("GaussianSpectrum: central frequency must be > 0");
}

double GaussianSpectrum::support_half_width() const {
  return 2.0 * std::sqrt(std::log(1e14)) / pulse_length;
}

double gaussian_spectrum_value(const GaussianSpectrum& spec, double omega) {
  if (!(omega >= 0.0)) throw InvalidArgument("gaussian_spectrum_value: omega must be >= 0");
  const double L = spec.pulse_length;
  const double detuning = omega - spec.central_frequency;
  return std::pow(L * L / (2.0 * std::numbers::pi), 0.25) * std::exp(-L * L * detuning * detuning / 4.0);
}

double spectrum_norm(const GaussianSpectrum& spec) {
  const double half = spec.support_half_width();
  numerics::QuadratureSpec q;
  q.absolute_tolerance = 1e-13;
  q.relative_tolerance = 1e-13;
  q.domain = {std::max(0.0, spec.central_frequency - half), spec.central_frequency + half};
  q.breakpoints = {spec.central_frequency};
  auto density = [&](double w) { return complex(std::pow(gaussian_spectrum_value(spec, w), 2), 0.0); };
  return numerics::integrate_or_throw(density, q, "spectrum_norm").real();
}

LogValue continuum_normalization(const SphereStateParams& params, const GaussianSpectrum& spec) {
  const double norm = spectrum_norm(spec);
  if (std::abs(norm - 1.0) > 1e-9) {
    throw InvalidArgument("continuum_normalization: spectrum not normalized on omega >= 0 (norm = " +
                          std::to_string(norm) + "); pulse too short for its carrier");
  }
  // The reduction: (int |Z phi|^2)^m = |Z|^{2m} once the shape is unit-normalized.
  const SphereStateSums sums(params);
  return {sums.log_norm(), std::exp(sums.log_norm())};
}

PhotonNumberMoments photon_number_moments(const SphereStateSums& sums) {
  PhotonNumberMoments m;
  for (int n = 1; n <= sums.N(); ++n) {
    const double p = sums.probability(n);
    m.mean += n * p;
    m.second_factorial += static_cast<double>(n) * (n - 1) * p;
  }
  return m;
}

}  // namespace slabqo
