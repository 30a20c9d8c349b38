#pragma once

#include "slabqo/scattering.hpp"
#include "slabqo/states.hpp"
#include "slabqo/thermal.hpp"

namespace slabqo {

enum class J2Method {
  quadrature,  ///< direct integral over the slab's absorption spectrum
  closed,      ///< frozen-index expansion in terms of I0 (needs a constant-index slab)
};

struct CorrelationSettings {
  /// hbar / (4 pi eps0 c sigma); enters |J1|^2 and J2 linearly, so g2 does not depend on it.
  double prefactor = 1.0;
  double relative_tolerance = 1e-10;
  int max_subdivisions = 20000;
  J2Method j2_method = J2Method::quadrature;
};

/// Where the J integrals were truncated, for run metadata.
struct IntegrationWindow {
  double lower = 0.0;
  double upper = 0.0;
};

/// Gaussian support used by j1: amplitude below 1e-14 of its peak outside.
IntegrationWindow j1_window(const GaussianSpectrum& spectrum);
/// Bose cutoff used by j2: omega nbar(omega) below 1e-14 of its omega -> 0 value outside.
IntegrationWindow j2_window(ThermalEnvironment env);

/// J1(t) = sqrt(prefactor) int_0^inf d omega e^{-i omega t} T(omega) Z(omega).
complex j1(double t, const GaussianSpectrum& spectrum, const Slab& slab, const CorrelationSettings& settings = {});

/// J2(t) = prefactor int_0^inf d omega omega e^{-i omega t} nbar(omega) A(omega), by quadrature.
complex j2(double t, ThermalEnvironment env, const Slab& slab, const CorrelationSettings& settings = {});

/// I0(t, a, b) = l^2 int_0^inf d omega omega e^{-[a l - i (b l + t)] omega} / (e^{omega/theta} - 1)
///             = l^2 sum_{m>=1} 1 / (s + m/theta)^2,  s = a l - i (b l + t).
/// Throws InvalidArgument for a < 0 or theta = 0.
complex i0(double t, double a, double b, ThermalEnvironment env, SlabGeometry geom);

/// Narrowband |J1(tau)|^2 for a pulse through a slab of frozen index n_c:
///   prefactor 2 sqrt(2 pi) |T_c|^2 / L * (L^2 / B) * exp(-2 tau^2 / L^2),
///   B = L^2 + 2 L^2 (eta^2 - 1)^2 - 4 L^3 kappa omega_c (eta^2 - 1)^2 (eta^2 + 1) / eta.
/// tau is measured from the pulse peak. Throws PhysicalityError if B <= 0.
double j1_sq_closed(double tau, const GaussianSpectrum& spectrum, ComplexIndex n_c, complex T_c,
                    double prefactor = 1.0);

/// Frozen-index J2(t) as the six-term I0 combination. I0 carries e^{+i omega t},
/// so the combination is evaluated at -t to follow the e^{-i omega t} convention of J2.
complex j2_closed(double t, ThermalEnvironment env, ComplexIndex n_c, SlabGeometry geom, double prefactor = 1.0);

/// |j2_closed(t)|^2.
double j2_sq_closed(double t, ThermalEnvironment env, ComplexIndex n_c, SlabGeometry geom, double prefactor = 1.0);

/// J2 by the configured method; zero at theta = 0.
complex j2_value(double t, ThermalEnvironment env, const Slab& slab, const CorrelationSettings& settings);

struct CorrelationPoint {
  double retarded_time = 0.0;
  double tau = 0.0;
  double g2 = 0.0;
};

/// Two-time degree of second-order coherence of the transmitted continuum-mode
/// sphere coherent state with spectral amplitude Z * phi(omega).
CorrelationPoint g2(double retarded_time, double tau, const SphereStateParams& state, const GaussianSpectrum& spectrum,
                    ThermalEnvironment env, const Slab& slab, const CorrelationSettings& settings = {});

/// Noise-only limit 1 + |J2(tau) / J2(0)|^2. Requires theta > 0.
double g2_thermal_limit(double tau, ThermalEnvironment env, const Slab& slab, const CorrelationSettings& settings = {});

/// Helper for sweeps at fixed t_r: J1(t_r) and the state moments are computed once.
class CorrelationSweep {
 public:
  CorrelationSweep(double retarded_time, const SphereStateParams& state, const GaussianSpectrum& spectrum,
                   ThermalEnvironment env, Slab slab, CorrelationSettings settings = {});

  CorrelationPoint at(double tau) const;

  const PhotonNumberMoments& moments() const { return moments_; }
  double thermal_zero() const { return j2_zero_; }

 private:
  double retarded_time_;
  GaussianSpectrum spectrum_;
  ThermalEnvironment env_;
  Slab slab_;
  CorrelationSettings settings_;
  PhotonNumberMoments moments_;
  complex j1_ref_;
  double j2_zero_;
};

}  // namespace slabqo
