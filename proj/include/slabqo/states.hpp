#pragma once

#include <complex>
#include <vector>

namespace slabqo {

using complex = std::complex<double>;

/// Sphere coherent state |Z> on an (N+1)-dimensional Fock space with curvature lambda.
struct SphereStateParams {
  double lambda = 0.0;
  int N = 1;
  complex Z{};

  SphereStateParams() = default;
  /// Throws InvalidArgument unless N >= 1 and lambda >= 0.
  SphereStateParams(double lambda, int N, complex Z);
};

/// c_0 .. c_N of a normalized state.
struct FockCoefficients {
  std::vector<complex> c;

  int dimension_minus_one() const { return static_cast<int>(c.size()) - 1; }
};

/// A positive quantity carried in log space; `value` may overflow to +inf.
struct LogValue {
  double log_value = 0.0;
  double value = 1.0;
};

/// sqrt(N + 1 - n), 0 <= n <= N + 1.
double flat_deformation(int n, int N);

/// g(lambda, n) = sqrt[(lambda (N+1-n) + s)(lambda n + s)], s = sqrt(1 + lambda^2/4).
double sphere_deformation(double lambda, int n, int N);

/// [g(lambda, n)]! = g(lambda, n) g(lambda, n-1) ... g(lambda, 1), with [g]!(0) = 1.
LogValue g_factorial(double lambda, int n, int N);

/// Combinatorial building blocks of the sphere coherent state, all in log space:
///   |c_n| sqrt(M) = sqrt(C(N,n)) [g(lambda,n)]! |Z|^n.
/// `weight_scale` multiplies |Z|^2 (used for the spectral norm of a continuum state).
class SphereStateSums {
 public:
  explicit SphereStateSums(const SphereStateParams& params, double weight_scale = 1.0);

  int N() const { return N_; }

  /// ln( sqrt(C(N,n)) [g]!(n) ); -inf outside 0..N.
  double half_log_amplitude(int n) const;

  /// ln(|Z|^power) with the convention |Z|^0 = 1 even for Z = 0.
  double log_abs_z_power(int power) const;

  /// ln M, M = sum_n C(N,n) ([g]!(n))^2 |Z|^{2n}.
  double log_norm() const { return log_norm_; }

  /// |c_n|^2.
  double probability(int n) const;

 private:
  int N_;
  double log_abs_z_;
  std::vector<double> half_log_amp_;
  double log_norm_;
};

FockCoefficients scs_coefficients(const SphereStateParams& params);

/// <n> (order 1) or <n^2> (order 2) of a normalized state.
double input_state_moment(const FockCoefficients& coeffs, int order);

/// Gaussian pulse spectrum; pulse_length in c / omega_ref, central_frequency in omega_ref.
struct GaussianSpectrum {
  double pulse_length = 100.0;
  double central_frequency = 1.0;

  GaussianSpectrum() = default;
  GaussianSpectrum(double pulse_length, double central_frequency);

  /// Half-width about the centre beyond which the amplitude is below 1e-14 of its peak.
  double support_half_width() const;
};

/// (L^2 / 2 pi)^{1/4} exp(-L^2 (omega - omega_c)^2 / 4).
double gaussian_spectrum_value(const GaussianSpectrum& spec, double omega);

/// Quadrature of |Z(omega)|^2 over the physical half-line omega >= 0.
double spectrum_norm(const GaussianSpectrum& spec);

/// Normalization of the continuum-mode state with spectral amplitude Z * phi(omega):
///   M = sum_m C(N,m) ([g]!(m))^2 (int |Z phi|^2 d omega)^m.
/// Requires the Gaussian to be normalized on omega >= 0 to 1e-9; throws
/// InvalidArgument otherwise (the pulse then reaches into omega < 0).
LogValue continuum_normalization(const SphereStateParams& params, const GaussianSpectrum& spec);

/// Factorial moments of a photon-number distribution.
struct PhotonNumberMoments {
  double mean = 0.0;         ///< <n>
  double second_factorial = 0.0;  ///< <n (n - 1)>
};

PhotonNumberMoments photon_number_moments(const SphereStateSums& sums);

}  // namespace slabqo
