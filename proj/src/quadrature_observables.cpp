#include "slabqo/quadrature_observables.hpp"

#include <cmath>
#include <string>

#include "slabqo/errors.hpp"

namespace slabqo {

namespace {

void check_channel(complex T, double noise, const char* what) {
  if (!(noise >= 0.0) || !std::isfinite(noise)) throw InvalidArgument(std::string(what) + ": noise must be >= 0");
  if (!(std::abs(T) <= 1.0 + 1e-12)) throw InvalidArgument(std::string(what) + ": |T| must be <= 1");
}

}  // namespace

Channel channel_at(const Slab& slab, ThermalEnvironment env, double omega) {
  Channel ch;
  ch.amplitudes = slab.amplitudes(omega);
  ch.noise = noise_second_moment(ch.amplitudes, env);
  return ch;
}

double quadrature_variance_closed(const SphereStateParams& state, complex T, double noise, Quadrature quadrature) {
  check_channel(T, noise, "quadrature_variance_closed");
  const SphereStateSums sums(state);
  const int N = state.N;
  const double lm = sums.log_norm();
  auto h = [&](int n) { return sums.half_log_amplitude(n); };
  auto z = [&](int power) { return sums.log_abs_z_power(power); };

  const complex ZT = state.Z * T;
  double phase_term = 2.0 * (ZT * ZT).real();  // Z^2 T^2 + c.c.
  if (quadrature == Quadrature::y) phase_term = -phase_term;
  const double cross = phase_term + 2.0 * std::norm(ZT);
  const double t2 = std::norm(T);

  // Double sum over Fock indices; |Z|^{2n} multiplies the whole first bracket
  // (checked against the moment oracle in the tests).
  double diagonal = 0.0;
  double two_photon = 0.0;
  for (int n = 0; n <= N; ++n) {
    diagonal += std::exp(2.0 * h(n) + z(2 * n) - lm) * (2.0 * n * t2 + 1.0 + 2.0 * noise);
    if (n + 2 <= N) {
      two_photon += std::exp(h(n) + h(n + 2) + z(2 * n) - lm) * std::sqrt((n + 1.0) * (n + 2.0));
    }
  }

  double coherent = 0.0;
  for (int n = 0; n < N; ++n) {
    for (int k = 0; k < N; ++k) {
      coherent += std::exp(h(n) + h(n + 1) + h(k) + h(k + 1) + z(2 * n + 2 * k) - 2.0 * lm) *
                  std::sqrt((n + 1.0) * (k + 1.0));
    }
  }

  const double variance = 0.25 * (diagonal + two_photon * phase_term - coherent * cross);
  if (variance < -1e-12) {
    throw PhysicalityError("quadrature_variance_closed: negative variance " + std::to_string(variance));
  }
  return variance;
}

double squeezing_parameter(double variance) { return 4.0 * variance - 1.0; }

double mandel_q_closed(const SphereStateParams& state, complex T, double noise) {
  check_channel(T, noise, "mandel_q_closed");
  const SphereStateSums sums(state);
  const int N = state.N;
  const double t2 = std::norm(T);
  const double t4 = t2 * t2;

  std::vector<double> p(N + 1);
  for (int n = 0; n <= N; ++n) p[n] = sums.probability(n);

  double numerator = 0.0;
  double denominator = 0.0;
  for (int n = 0; n <= N; ++n) {
    double inner = 0.0;
    for (int k = 0; k <= N; ++k) {
      inner += p[k] * (static_cast<double>(n) * k * t4 + noise * noise + (n + k) * t2 * noise);
    }
    const double nn = n;
    numerator += p[n] * ((nn * nn * t4 - nn * t4 + 4.0 * nn * t2 * noise + 2.0 * noise * noise) - inner);
    denominator += p[n] * (nn * t2 + noise);
  }
  if (!(denominator > 0.0)) {
    throw PhysicalityError("mandel_q_closed: transmitted mean photon number is zero, Q undefined");
  }
  return numerator / denominator;
}

double OutputMoments::mandel_q() const {
  if (!(mean_photon > 0.0)) throw PhysicalityError("mandel_q: mean photon number is zero");
  return (photon_second - mean_photon * mean_photon - mean_photon) / mean_photon;
}

OutputMoments output_moments_oracle(const SphereStateParams& state, complex T, double noise) {
  check_channel(T, noise, "output_moments_oracle");
  const FockCoefficients psi = scs_coefficients(state);
  const int N = psi.dimension_minus_one();

  // <a>, <a^2>, <a^dagger a>, <a^dagger^2 a^2> by applying the ladder operators.
  complex a1{}, a2{};
  double n1 = 0.0, n2f = 0.0;
  for (int n = 0; n <= N; ++n) {
    if (n + 1 <= N) a1 += std::conj(psi.c[n]) * psi.c[n + 1] * std::sqrt(n + 1.0);
    if (n + 2 <= N) a2 += std::conj(psi.c[n]) * psi.c[n + 2] * std::sqrt((n + 1.0) * (n + 2.0));
    n1 += n * std::norm(psi.c[n]);
    n2f += n * (n - 1.0) * std::norm(psi.c[n]);
  }

  // b = T a + R v + F: the vacuum port v drops out of every normally ordered
  // product; F is zero-mean Gaussian with <F^dagger F> = noise, <F F> = 0.
  const double t2 = std::norm(T);
  const complex b1 = T * a1;
  const complex b2 = T * T * a2;
  const double bdb = t2 * n1 + noise;
  const double bdbdbb = t2 * t2 * n2f + 4.0 * t2 * n1 * noise + 2.0 * noise * noise;

  OutputMoments m;
  m.mean_photon = bdb;
  m.photon_second = bdbdbb + bdb;
  m.x_mean = b1.real();
  m.y_mean = b1.imag();
  m.x_second = 0.25 * (2.0 * b2.real() + 2.0 * bdb + 1.0);
  m.y_second = 0.25 * (-2.0 * b2.real() + 2.0 * bdb + 1.0);
  return m;
}

}  // namespace slabqo
