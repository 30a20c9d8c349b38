#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slabqo/errors.hpp"
#include "slabqo/states.hpp"

using namespace slabqo;
using oracle::mp;

namespace {

mp mp_binomial(int N, int n) {
  mp c = 1;
  for (int k = 1; k <= n; ++k) c = c * (N - n + k) / k;
  return c;
}

mp mp_g(double lambda, int n, int N) {
  const mp lam(lambda);
  const mp s = sqrt(mp(1) + lam * lam / 4);
  return sqrt((lam * (N + 1 - n) + s) * (lam * n + s));
}

mp mp_gfact(double lambda, int n, int N) {
  mp p = 1;
  for (int k = 1; k <= n; ++k) p *= mp_g(lambda, k, N);
  return p;
}

}  // namespace

TEST_CASE("parameter validation") {
  CHECK_THROWS_AS(SphereStateParams(0.5, 0, 0.1), InvalidArgument);
  CHECK_THROWS_AS(SphereStateParams(-0.1, 5, 0.1), InvalidArgument);
  CHECK_THROWS_AS(GaussianSpectrum(0.0, 1.0), InvalidArgument);
}

TEST_CASE("deformation functions") {
  CHECK(std::abs(flat_deformation(0, 5) - std::sqrt(6.0)) < 1e-15);
  CHECK(flat_deformation(6, 5) == 0.0);
  CHECK(flat_deformation(5, 5) == 1.0);

  for (int N : {1, 5, 50}) {
    for (int n = 0; n <= N; ++n) CHECK(sphere_deformation(0.0, n, N) == 1.0);
  }
  for (double lam : {0.1, 1.0, 10.0}) {
    for (int n = 0; n <= 5; ++n) CHECK(sphere_deformation(lam, n, 5) > 0.0);
  }
  const double oracle_g = mp_g(1.0, 0, 5).convert_to<double>();
  CHECK(std::abs(sphere_deformation(1.0, 0, 5) - oracle_g) < 1e-15 * oracle_g);
}

TEST_CASE("deformed factorial") {
  CHECK(g_factorial(0.7, 0, 5).value == 1.0);
  CHECK(g_factorial(0.7, 0, 5).log_value == 0.0);
  CHECK(std::abs(g_factorial(0.7, 1, 5).value - sphere_deformation(0.7, 1, 5)) < 1e-15);
  const LogValue big = g_factorial(1.0, 50, 50);
  const double ln = log(mp_gfact(1.0, 50, 50)).convert_to<double>();
  CHECK(std::isfinite(big.log_value));
  CHECK(std::abs(big.log_value - ln) < 1e-13 * ln);
  for (int n = 0; n <= 10; ++n) {
    const LogValue v = g_factorial(2.0, n, 10);
    CHECK(std::abs(std::exp(v.log_value) - v.value) <= 1e-12 * v.value);
  }
}

TEST_CASE("sphere coherent state coefficients") {
  SUBCASE("vacuum") {
    const FockCoefficients c = scs_coefficients(SphereStateParams(1.0, 5, 0.0));
    CHECK(c.c[0] == complex{1.0});
    for (int n = 1; n <= 5; ++n) CHECK(c.c[n] == complex{0.0});
    CHECK(input_state_moment(c, 1) == 0.0);
  }
  SUBCASE("normalization over (lambda, Z, N)") {
    for (double lam : {0.0, 1.0, 10.0}) {
      for (complex Z : {complex{0.01}, complex{0.5, 0.5}, complex{2.0}, complex{0.0, -1.3}}) {
        for (int N : {1, 5, 20, 50}) {
          const FockCoefficients c = scs_coefficients(SphereStateParams(lam, N, Z));
          double sum = 0.0;
          for (const complex& x : c.c) sum += std::norm(x);
          CHECK(std::abs(sum - 1.0) < 1e-12);
        }
      }
    }
  }
  SUBCASE("(lambda=1, N=5, Z=0.01) against 50-digit naive evaluation") {
    const int N = 5;
    const mp Z("0.01");
    mp M = 0;
    for (int n = 0; n <= N; ++n) {
      M += mp_binomial(N, n) * pow(mp_gfact(1.0, n, N), 2) * pow(Z, 2 * n);
    }
    const FockCoefficients c = scs_coefficients(SphereStateParams(1.0, N, 0.01));
    mp mean = 0;
    for (int n = 0; n <= N; ++n) {
      const mp cn = sqrt(mp_binomial(N, n)) * mp_gfact(1.0, n, N) * pow(Z, n) / sqrt(M);
      mean += n * cn * cn;
      const double ref = cn.convert_to<double>();
      CHECK(std::abs(c.c[n].real() - ref) <= 1e-13 * ref);
      CHECK(c.c[n].imag() == 0.0);
    }
    const double m = mean.convert_to<double>();
    CHECK(std::abs(input_state_moment(c, 1) - m) <= 1e-12 * m);
  }
  SUBCASE("top Fock state") {
    FockCoefficients top;
    top.c.assign(6, 0.0);
    top.c[5] = 1.0;
    CHECK(input_state_moment(top, 1) == 5.0);
    CHECK(input_state_moment(top, 2) == 25.0);
  }
  SUBCASE("phase of Z enters as Z^n") {
    const FockCoefficients a = scs_coefficients(SphereStateParams(1.0, 5, complex{0.0, 0.3}));
    const FockCoefficients b = scs_coefficients(SphereStateParams(1.0, 5, 0.3));
    for (int n = 0; n <= 5; ++n) {
      CHECK(std::abs(a.c[n] - b.c[n] * std::pow(complex{0.0, 1.0}, n)) < 1e-15);
    }
  }
}

TEST_CASE("mean photon number grows with |Z|") {
  for (double lam : {0.0, 0.5, 3.0}) {
    for (int N : {1, 4, 10}) {
      double prev = -1.0;
      for (double z = 0.0; z <= 3.0; z += 0.05) {
        const double m = input_state_moment(scs_coefficients(SphereStateParams(lam, N, z)), 1);
        CHECK(m >= prev);
        prev = m;
      }
    }
  }
}

TEST_CASE("log-space sums agree with linear values") {
  const SphereStateParams p(0.8, 12, 0.7);
  const SphereStateSums sums(p);
  double M = 0.0;
  for (int n = 0; n <= 12; ++n) {
    const double c = std::exp(numerics::log_binomial(12, n)) * std::pow(g_factorial(0.8, n, 12).value, 2) *
                     std::pow(0.7, 2 * n);
    M += c;
    const double lin = std::sqrt(std::exp(numerics::log_binomial(12, n))) * g_factorial(0.8, n, 12).value;
    CHECK(std::abs(std::exp(sums.half_log_amplitude(n)) - lin) <= 1e-12 * lin);
  }
  CHECK(std::abs(std::exp(sums.log_norm()) - M) <= 1e-12 * M);
  CHECK(sums.half_log_amplitude(13) == -std::numeric_limits<double>::infinity());
  const PhotonNumberMoments m = photon_number_moments(sums);
  const FockCoefficients c = scs_coefficients(p);
  CHECK(std::abs(m.mean - input_state_moment(c, 1)) < 1e-12 * m.mean);
  CHECK(std::abs(m.second_factorial - (input_state_moment(c, 2) - input_state_moment(c, 1))) <
        1e-12 * m.second_factorial);
}

TEST_CASE("Gaussian spectrum") {
  const GaussianSpectrum s(100.0, 1.0);
  const double peak = std::pow(100.0 * 100.0 / (2.0 * std::numbers::pi), 0.25);
  CHECK(std::abs(gaussian_spectrum_value(s, 1.0) - peak) < 1e-14 * peak);
  CHECK(std::abs(gaussian_spectrum_value(s, 1.0 + 2.0 / 100.0) - peak / std::exp(1.0)) < 1e-14 * peak);
  CHECK(std::abs(gaussian_spectrum_value(s, 1.0 - 2.0 / 100.0) - peak / std::exp(1.0)) < 1e-14 * peak);
  CHECK(std::abs(spectrum_norm(s) - 1.0) < 1e-12);
  CHECK(gaussian_spectrum_value(s, 1.0 + s.support_half_width()) <= 1.0001e-14 * peak);
}

TEST_CASE("continuum normalization") {
  const GaussianSpectrum s(100.0, 1.0);
  SUBCASE("flat limit gives 2^N") {
    for (int N : {1, 5, 50}) {
      const LogValue M = continuum_normalization(SphereStateParams(0.0, N, 1.0), s);
      const double expected = N * std::log(2.0);
      CHECK(std::abs(M.log_value - expected) <= 1e-12 * expected);
      CHECK(std::abs(M.value - std::ldexp(1.0, N)) <= 1e-12 * std::ldexp(1.0, N));
    }
  }
  SUBCASE("(lambda=1, N=50) against 50-digit summation") {
    mp M = 0;
    for (int m = 0; m <= 50; ++m) M += mp_binomial(50, m) * pow(mp_gfact(1.0, m, 50), 2);
    const double ln = log(M).convert_to<double>();
    CHECK(std::abs(continuum_normalization(SphereStateParams(1.0, 50, 1.0), s).log_value - ln) < 1e-13 * ln);
  }
  SUBCASE("pulse reaching negative frequencies is rejected") {
    CHECK_THROWS_AS(continuum_normalization(SphereStateParams(0.0, 5, 1.0), GaussianSpectrum(1.0, 0.3)),
                    InvalidArgument);
  }
}
