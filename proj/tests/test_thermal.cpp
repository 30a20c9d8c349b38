#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "slabqo/errors.hpp"
#include "slabqo/thermal.hpp"

using namespace slabqo;

namespace {
const LorentzParams kLorentz{1.0, 0.5, 0.01};
const SlabGeometry kGeom{5.0};
}  // namespace

TEST_CASE("thermal environment") {
  CHECK_THROWS_AS(ThermalEnvironment(-0.1), InvalidArgument);
  CHECK(ThermalEnvironment(0.25).coherence_time() == 4.0);
  CHECK_THROWS_AS(ThermalEnvironment(0.0).coherence_time(), InvalidArgument);
}

TEST_CASE("Bose occupation") {
  CHECK(mean_thermal_photons(1.0, ThermalEnvironment(0.0)) == 0.0);
  CHECK(std::abs(mean_thermal_photons(std::log(2.0), ThermalEnvironment(1.0)) - 1.0) < 1e-15);
  for (double ratio : {100.0, 1e3, 1e6}) {
    const double n = mean_thermal_photons(1.0, ThermalEnvironment(ratio));
    CHECK(std::abs(n - ratio) <= 0.01 * ratio);
  }
  // small argument keeps full precision: 1/expm1(x) = 1/x - 1/2 + x/12
  const double x = 1e-9;
  CHECK(std::abs(mean_thermal_photons(x, ThermalEnvironment(1.0)) - (1.0 / x - 0.5)) < 1e-6);
  CHECK_THROWS_AS(mean_thermal_photons(0.0, ThermalEnvironment(1.0)), InvalidArgument);
}

TEST_CASE("noise second moment: boundary lines") {
  const Slab lossy(kLorentz, kGeom);
  const Slab lossless(ComplexIndex{1.4, 0.0}, kGeom);
  for (double w : {0.3, 1.0, 2.0}) {
    CHECK(noise_second_moment(lossy.amplitudes(w), ThermalEnvironment(0.0)) == 0.0);
    for (double th : {0.1, 0.6, 5.0}) {
      CHECK(std::abs(noise_second_moment(lossless.amplitudes(w), ThermalEnvironment(th))) < 1e-12);
    }
  }
}

TEST_CASE("noise second moment at resonance against 50-digit evaluation") {
  using oracle::mp;
  using oracle::mpc;
  const mp w(1), l(5), th("0.6");
  const mpc i(mp(0), mp(1));
  const mpc n = oracle::passive_sqrt(oracle::to_mp(permittivity(kLorentz, 1.0)));
  const mpc E = exp(mp(4) * i * w * n * l);
  const mpc D = (n + mp(1)) * (n + mp(1)) - (n - mp(1)) * (n - mp(1)) * E;
  const mpc R = (n * n - mp(1)) * exp(mp(-2) * i * w * l) * (E - mp(1)) / D;
  const mpc T = mp(4) * n * exp(mp(2) * i * w * (n - mp(1)) * l) / D;
  const mp A = mp(1) - norm(R) - norm(T);
  const mp nbar = mp(1) / (exp(w / th) - mp(1));
  const double expected = (nbar * A).convert_to<double>();
  const double got = noise_second_moment(Slab(kLorentz, kGeom).amplitudes(1.0), ThermalEnvironment(0.6));
  CHECK(std::abs(got - expected) <= 1e-12 * expected);
}

TEST_CASE("noise second moment: sign and monotonicity in theta") {
  const Slab slab(kLorentz, kGeom);
  for (int i = 0; i < 60; ++i) {
    const double w = 0.05 + 2.95 * i / 59.0;
    const ScatteringAmplitudes a = slab.amplitudes(w);
    double prev = -1.0;
    for (double th : {0.0, 0.05, 0.2, 0.6, 1.0, 3.0}) {
      const double v = noise_second_moment(a, ThermalEnvironment(th));
      CHECK(v >= 0.0);
      if (a.A > 0.0 && th > 0.0) CHECK(v > prev);
      prev = v;
    }
  }
}
