#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slabqo/errors.hpp"
#include "slabqo/numerics.hpp"

using namespace slabqo;
using namespace slabqo::numerics;

namespace {

constexpr double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

QuadratureSpec on(double lo, double hi) {
  QuadratureSpec q;
  q.domain = {lo, hi};
  return q;
}

}  // namespace

TEST_CASE("integrate: analytic integrals and error bounds") {
  SUBCASE("constant") {
    const auto r = integrate([](double) { return complex{1.0}; }, on(0.0, 1.0));
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0) < 1e-14);
    CHECK(std::abs(r.value - 1.0) <= r.error_estimate + 1e-16);
  }
  SUBCASE("exponential on the half-line") {
    const auto r = integrate([](double x) { return complex{std::exp(-x)}; }, on(0.0, kInfinity));
    CHECK(r.converged);
    CHECK(std::abs(r.value - 1.0) < 1e-12);
    CHECK(std::abs(r.value - 1.0) <= r.error_estimate + 1e-16);
  }
  SUBCASE("Bose integral equals zeta(2)") {
    // series oracle: sum 1/m^2 with the exact tail 1/M - 1/(2M^2) + 1/(6M^3)
    double series = 0.0;
    const int M = 100000;
    for (int m = M - 1; m >= 1; --m) series += 1.0 / (static_cast<double>(m) * m);
    series += 1.0 / M + 0.5 / (static_cast<double>(M) * M) + 1.0 / (6.0 * M * static_cast<double>(M) * M);
    CHECK(std::abs(series - kZeta2) < 1e-14);
    const auto r = integrate(
        [](double x) { return complex{x <= 0.0 ? 1.0 : x / std::expm1(x)}; }, on(0.0, kInfinity));
    CHECK(r.converged);
    CHECK(std::abs(r.value - series) < 1e-10);
    CHECK(std::abs(r.value - series) <= r.error_estimate + 1e-15);
  }
}

TEST_CASE("integrate: oscillatory panels, breakpoints and failure modes") {
  QuadratureSpec q = on(0.0, 200.0);
  q.initial_panels = 64;
  const auto r = integrate([](double x) { return std::exp(complex{0.0, 3.0 * x}); }, q);
  const complex exact = (std::exp(complex{0.0, 600.0}) - 1.0) / complex{0.0, 3.0};
  CHECK(std::abs(r.value - exact) < 1e-10);

  QuadratureSpec kink = on(-1.0, 2.0);
  kink.breakpoints = {0.0};
  const auto k = integrate_real([](double x) { return std::abs(x); }, kink);
  CHECK(std::abs(k.value.real() - 2.5) < 1e-14);

  QuadratureSpec tight = on(0.0, 1.0);
  tight.max_subdivisions = 1;
  tight.relative_tolerance = 1e-15;
  tight.absolute_tolerance = 1e-300;
  auto spiky = [](double x) { return complex{1.0 / std::sqrt(std::abs(x - 0.3) + 1e-12)}; };
  CHECK_FALSE(integrate(spiky, tight).converged);
  CHECK_THROWS_AS(integrate_or_throw(spiky, tight, "spike"), ConvergenceError);

  QuadratureSpec bad = on(0.0, 1.0);
  bad.relative_tolerance = 0.0;
  CHECK_THROWS_AS(bad.validate(), InvalidArgument);
  bad = on(0.0, 1.0);
  bad.max_subdivisions = 0;
  CHECK_THROWS_AS(integrate([](double) { return complex{1.0}; }, bad), InvalidArgument);
  CHECK_THROWS_AS(integrate([](double) { return complex{std::nan("")}; }, on(0.0, 1.0)), InvalidArgument);
}

TEST_CASE("trigamma_sum: special values") {
  CHECK(std::abs(trigamma_sum(0.0, 1.0) - kZeta2) < 1e-14);
  CHECK(std::abs(trigamma_sum(1.0, 1.0) - (kZeta2 - 1.0)) < 1e-14);
  CHECK(std::abs(trigamma_sum(3.0, 3.0) - (kZeta2 - 1.0) / 9.0) < 1e-15);
  // beta scaling: sum 1/(m beta)^2 = zeta(2) / beta^2
  CHECK(std::abs(trigamma_sum(0.0, 400.0) - kZeta2 / 160000.0) < 1e-20);
  CHECK_THROWS_AS(trigamma_sum(0.0, 0.0), InvalidArgument);
  CHECK_THROWS_AS(trigamma_sum(complex{-0.1, 0.0}, 1.0), InvalidArgument);
}

TEST_CASE("trigamma_sum: agrees with the Laplace integral on a 27-point complex grid") {
  int checked = 0;
  for (double x : {0.0, 0.5, 3.0}) {
    for (double y : {0.0, 2.0, -10.0}) {
      for (double beta : {0.5, 1.0, 4.0}) {
        const complex series = trigamma_sum(complex{x, -y}, beta);
        const complex quad = oracle::i0_quadrature(0.0, x, y, 1.0 / beta, 1.0);
        CAPTURE(x);
        CAPTURE(y);
        CAPTURE(beta);
        CHECK(std::abs(series - quad) <= 1e-8 * std::abs(quad));
        ++checked;
      }
    }
  }
  CHECK(checked == 27);
}

TEST_CASE("trigamma_sum: tail length does not matter") {
  const complex s{0.2, -7.0};
  const complex a = trigamma_sum(s, 0.7, SeriesPolicy{8});
  const complex b = trigamma_sum(s, 0.7, SeriesPolicy{400});
  CHECK(std::abs(a - b) < 1e-12 * std::abs(b));
}

TEST_CASE("log_binomial") {
  CHECK(log_binomial(5, 0) == 0.0);
  CHECK(std::abs(log_binomial(5, 2) - std::log(10.0)) < 1e-15);
  CHECK(log_binomial(5, 5) == 0.0);
  CHECK_THROWS_AS(log_binomial(5, 6), InvalidArgument);
  CHECK_THROWS_AS(log_binomial(5, -1), InvalidArgument);

  SUBCASE("exact integers for N <= 60") {
    for (long N = 0; N <= 60; ++N) {
      unsigned long long c = 1;  // C(N, k) built row-wise, fits in 64 bits for N <= 60
      for (long k = 0; k <= N; ++k) {
        const double exact = static_cast<double>(c);
        CHECK(std::abs(std::exp(log_binomial(N, k)) - exact) <= 1e-13 * exact);
        if (k < N) c = c * static_cast<unsigned long long>(N - k) / static_cast<unsigned long long>(k + 1);
      }
    }
  }
  SUBCASE("(50, 25) against a 50-digit factorial ratio") {
    using oracle::mp;
    mp f50 = 1, f25 = 1;
    for (int k = 2; k <= 50; ++k) f50 *= k;
    for (int k = 2; k <= 25; ++k) f25 *= k;
    const mp ln = log(f50 / (f25 * f25));
    CHECK(std::abs(log_binomial(50, 25) - ln.convert_to<double>()) < 1e-13 * ln.convert_to<double>());
  }
}

TEST_CASE("log_sum_exp") {
  const double v[] = {std::log(1.0), std::log(2.0), -std::numeric_limits<double>::infinity()};
  CHECK(std::abs(log_sum_exp(v) - std::log(3.0)) < 1e-15);
  const double big[] = {1000.0, 1000.0};
  CHECK(std::abs(log_sum_exp(big) - (1000.0 + std::log(2.0))) < 1e-12);
}
