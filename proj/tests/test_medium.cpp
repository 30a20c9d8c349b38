#include <doctest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "slabqo/errors.hpp"
#include "slabqo/medium.hpp"

using namespace slabqo;

namespace {
const LorentzParams kLorentz{1.0, 0.5, 0.01};
}

TEST_CASE("LorentzParams validation") {
  CHECK_THROWS_AS(LorentzParams(1.0, -0.5, 0.01), InvalidArgument);
  CHECK_THROWS_AS(LorentzParams(1.0, 0.5, -0.01), InvalidArgument);
  CHECK_THROWS_AS(LorentzParams(0.0, 0.5, 0.01), InvalidArgument);
  CHECK_NOTHROW(LorentzParams(1.0, 0.0, 0.0));
}

TEST_CASE("permittivity: limits and resonance") {
  CHECK(std::abs(permittivity(kLorentz, 0.0) - complex{1.25, 0.0}) < 1e-15);
  CHECK(permittivity(kLorentz, std::numeric_limits<double>::infinity()) == complex{1.0, 0.0});
  CHECK(std::abs(permittivity(kLorentz, 1e8) - 1.0) < 1e-16);
  CHECK(std::abs(permittivity(kLorentz, 1.0) - complex{1.0, 25.0}) < 1e-12);
  CHECK_THROWS_AS(permittivity(kLorentz, -0.1), InvalidArgument);
  CHECK_THROWS_AS(permittivity(LorentzParams(1.0, 0.5, 0.0), 1.0), SingularityError);
}

TEST_CASE("principal_index") {
  CHECK(principal_index(1.0).eta == 1.0);
  CHECK(principal_index(1.0).kappa == 0.0);
  CHECK(std::abs(principal_index(1.25).eta - std::sqrt(1.25)) < 1e-15);
  CHECK(principal_index(1.25).kappa == 0.0);

  SUBCASE("1 + 25i against a 50-digit polar square root") {
    using oracle::mp;
    const mp r = sqrt(mp(1) + mp(625));
    const mp phi = atan2(mp(25), mp(1)) / 2;
    const mp root_r = sqrt(r);
    const double eta = (root_r * cos(phi)).convert_to<double>();
    const double kappa = (root_r * sin(phi)).convert_to<double>();
    const ComplexIndex n = principal_index({1.0, 25.0});
    CHECK(n.eta > 0.0);
    CHECK(n.kappa > 0.0);
    CHECK(std::abs(n.eta - eta) < 1e-14 * eta);
    CHECK(std::abs(n.kappa - kappa) < 1e-14 * kappa);
  }
  SUBCASE("negative real permittivity gives a purely imaginary passive index") {
    const ComplexIndex n = principal_index(-4.0);
    CHECK(n.eta == doctest::Approx(0.0));
    CHECK(n.kappa == doctest::Approx(2.0));
  }
}

TEST_CASE("refractive_index: passivity and consistency on [0.01, 3]") {
  for (int i = 0; i < 300; ++i) {
    const double w = 0.01 + (3.0 - 0.01) * i / 299.0;
    const complex eps = permittivity(kLorentz, w);
    const ComplexIndex n = refractive_index(kLorentz, w);
    CAPTURE(w);
    CHECK(n.kappa >= 0.0);
    CHECK(n.eta > 0.0);
    CHECK(std::abs(n.value() * n.value() - eps) <= 1e-12 * std::abs(eps));
  }
}

TEST_CASE("lossless polariton gap: evanescent branch") {
  const LorentzParams lossless(1.0, 0.5, 0.0);
  const double w = 1.05;  // inside (1, sqrt(1.25))
  const ComplexIndex n = refractive_index(lossless, w);
  CHECK(permittivity(lossless, w).real() < 0.0);
  CHECK(n.eta == doctest::Approx(0.0));
  CHECK(n.kappa > 0.0);
}

TEST_CASE("Kramers-Kronig: real part from the imaginary part") {
  // Re eps(w) - 1 = (2/pi) P int_0^W w' Im eps(w') / (w'^2 - w^2) dw', W = 50.
  // Singularity subtraction leaves a smooth integrand plus an analytic PV term.
  const double W = 50.0;
  for (double w : {0.3, 0.5, 2.0}) {
    const double im_w = permittivity(kLorentz, w).imag();
    auto f = [&](double x) -> complex {
      const double num = x * permittivity(kLorentz, x).imag() - w * im_w;
      const double den = x * x - w * w;
      if (std::abs(den) < 1e-13) return 0.0;
      return num / den;
    };
    numerics::QuadratureSpec q;
    q.domain = {0.0, W};
    q.breakpoints = {w < 1.0 ? w : 1.0, w < 1.0 ? 1.0 : w};
    q.absolute_tolerance = 1e-12;
    q.max_subdivisions = 20000;
    const double regular = numerics::integrate(f, q).value.real();
    const double pv = w * im_w * std::log((W - w) / (W + w)) / (2.0 * w);
    const double kk = 2.0 / std::numbers::pi * (regular + pv);
    const double direct = permittivity(kLorentz, w).real() - 1.0;
    CAPTURE(w);
    CHECK(std::abs(kk - direct) <= 0.01 * std::abs(direct));
  }
}

TEST_CASE("frequency_for_extinction") {
  for (double kappa : {0.01, 0.001}) {
    const double w = frequency_for_extinction(kLorentz, kappa, 1e-9, 1.0);
    CHECK(w > 0.0);
    CHECK(w < 1.0);
    CHECK(refractive_index(kLorentz, w).kappa == doctest::Approx(kappa).epsilon(1e-9));
  }
  CHECK_THROWS_AS(frequency_for_extinction(kLorentz, 1e6, 1e-9, 1.0), InvalidArgument);
}
