#pragma once

#include <variant>
#include <vector>

#include "slabqo/medium.hpp"
#include "slabqo/numerics.hpp"

namespace slabqo {

/// Slab occupying |x| <= half_thickness (lengths in c / omega_ref).
struct SlabGeometry {
  double half_thickness = 1.0;

  SlabGeometry() = default;
  explicit SlabGeometry(double l);
};

/// Reflection/transmission at one frequency. The same T serves both input
/// ports (reciprocal two-port), so there is deliberately a single field.
struct ScatteringAmplitudes {
  complex R{};
  complex T{};
  double A = 0.0;  ///< 1 - |R|^2 - |T|^2
  double omega = 0.0;
};

/// Weights of the two internal counter-propagating waves in the noise operator.
struct NoiseModeCoefficients {
  complex V{};
  complex W{};
};

complex reflection_amplitude(ComplexIndex n, double omega, SlabGeometry geom);
complex transmission_amplitude(ComplexIndex n, double omega, SlabGeometry geom);
NoiseModeCoefficients noise_mode_coefficients(ComplexIndex n, double omega, SlabGeometry geom);

/// R, T and A at one frequency. Throws PhysicalityError if A leaves [0, 1]
/// by more than kAbsorptionTolerance.
ScatteringAmplitudes scatter(ComplexIndex n, double omega, SlabGeometry geom);

inline constexpr double kAbsorptionTolerance = 1e-9;

/// 1 - |R|^2 - |T|^2, unclamped; throws PhysicalityError when the value lies
/// outside [-tol, 1 + tol], which signals a branch or formula fault.
double absorption(const ScatteringAmplitudes& amps);

/// |A - (2 omega eta kappa) * int_{-l}^{l} |V e^{-i omega n x} + W e^{i omega n x}|^2 dx|,
/// the mismatch between the absorption and the noise-operator commutator.
double absorption_identity_residual(ComplexIndex n, double omega, SlabGeometry geom,
                                    double absolute_tolerance = 1e-10,
                                    double relative_tolerance = 1e-10);

/// A slab whose index either follows a Lorentz model or is frozen at a single
/// complex value (the narrowband approximation).
class Slab {
 public:
  using Medium = std::variant<LorentzParams, ComplexIndex>;

  Slab(Medium medium, SlabGeometry geometry) : medium_(medium), geometry_(geometry) {}

  ComplexIndex index(double omega) const;
  ScatteringAmplitudes amplitudes(double omega) const { return scatter(index(omega), omega, geometry_); }

  const Medium& medium() const { return medium_; }
  const SlabGeometry& geometry() const { return geometry_; }

  /// Frequencies where the absorption has sharp structure (quadrature breakpoints).
  std::vector<double> features() const;

 private:
  Medium medium_;
  SlabGeometry geometry_;
};

}  // namespace slabqo
