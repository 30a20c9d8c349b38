#include "slabqo/presets.hpp"

#include "slabqo/errors.hpp"

namespace slabqo::cli {

namespace {

// Lorentz material and slab of the reflectance figure, reused everywhere. The
// slab is 10 c/omega_0 thick, so the half-thickness is 5.
constexpr const char* kMaterial = R"(
material.resonance_frequency = 1
material.plasma_ratio = 0.5
material.gamma_ratio = 0.01
geometry.half_thickness = 5
output.dir = out
output.format = csv
correlation.prefactor = 1
correlation.relative_tolerance = 1e-10
correlation.max_subdivisions = 20000
correlation.j2_method = quadrature
correlation.retarded_time = 0
correlation.tau = 0
)";

constexpr const char* kFig2 = R"(
observable = scattering
environment.theta = 0
grid.omega.min = 0.05
grid.omega.max = 3
grid.omega.points = 591
)";

// Single-mode surfaces over (lambda, omega), Z = 0.01 and N = 5.
constexpr const char* kSurface = R"(
state.N = 5
state.Z = 0.01
state.Z_imag = 0
state.lambda = 0
grid.lambda.min = 0
grid.lambda.max = 5
grid.lambda.points = 51
grid.omega.min = 0.2
grid.omega.max = 2
grid.omega.points = 91
)";

// Zero temperature, so the detector frequency cancels from g2. Only N is fixed
// by the figure; Z = 0.01 follows the single-mode figures and the pulse sits at
// 0.3 omega_0 with L = 100 c/omega_0, away from the opaque resonance band.
constexpr const char* kFig5 = R"(
observable = g2_lambda
environment.theta = 0
state.N = 50
state.Z = 0.01
state.Z_imag = 0
state.lambda = 0
spectrum.pulse_length = 100
spectrum.central_frequency = 0.3
grid.lambda.min = 0
grid.lambda.max = 5
grid.lambda.points = 101
)";

// Frequencies and temperatures in units of the pulse frequency omega_c, chosen
// below resonance where kappa(omega_c) equals operating_point.kappa; the slab is
// frozen at n(omega_c). Z = 1 scales the normalized Gaussian. The figure leaves
// the pulse length open: L = 1e7 c/omega_c puts the pulse intensity
// between the two thermal levels, so noise dominates at theta = 0.25 and the
// pulse at theta = 0.0025. tau runs in units of the thermal coherence time.
constexpr const char* kFig6 = R"(
observable = g2_tau
environment.theta = 0.0025, 0.25
state.N = 50
state.lambda = 1
state.Z = 1
state.Z_imag = 0
spectrum.pulse_length = 1e7
spectrum.central_frequency = 1
correlation.j2_method = closed
grid.tau.min = 0
grid.tau.max = 10
grid.tau.points = 201
)";

// Every key any observable reads, so a custom run only overrides what it changes.
constexpr const char* kCustom = R"(
spectrum.pulse_length = 100
spectrum.central_frequency = 0.3
grid.lambda.min = 0
grid.lambda.max = 0
grid.lambda.points = 1
grid.tau.min = 0
grid.tau.max = 0
grid.tau.points = 1
)";

Config layered(std::initializer_list<const char*> parts) {
  Config cfg;
  for (const char* p : parts) cfg.merge(Config::parse(p, "<preset>"));
  return cfg;
}

}  // namespace

FigureId parse_figure(const std::string& name) {
  for (FigureId id : all_figures()) {
    if (to_string(id) == name) return id;
  }
  throw InvalidArgument("unknown figure id '" + name + "'");
}

std::string to_string(FigureId id) {
  switch (id) {
    case FigureId::fig2: return "fig2";
    case FigureId::fig3a: return "fig3a";
    case FigureId::fig3b: return "fig3b";
    case FigureId::fig4a: return "fig4a";
    case FigureId::fig4b: return "fig4b";
    case FigureId::fig5: return "fig5";
    case FigureId::fig6a: return "fig6a";
    case FigureId::fig6b: return "fig6b";
    case FigureId::custom: return "custom";
  }
  return "custom";
}

std::vector<FigureId> all_figures() {
  return {FigureId::fig2,  FigureId::fig3a, FigureId::fig3b, FigureId::fig4a, FigureId::fig4b,
          FigureId::fig5,  FigureId::fig6a, FigureId::fig6b, FigureId::custom};
}

Config preset_defaults(FigureId id) {
  Config cfg;
  switch (id) {
    case FigureId::fig2:
      cfg = layered({kMaterial, kFig2});
      break;
    case FigureId::fig3a:
      cfg = layered({kMaterial, kSurface, "observable = squeezing\nenvironment.theta = 0\n"});
      break;
    case FigureId::fig3b:
      cfg = layered({kMaterial, kSurface, "observable = squeezing\nenvironment.theta = 0.6\n"});
      break;
    case FigureId::fig4a:
      cfg = layered({kMaterial, kSurface, "observable = mandel_q\nenvironment.theta = 0\n"});
      break;
    case FigureId::fig4b:
      cfg = layered({kMaterial, kSurface, "observable = mandel_q\nenvironment.theta = 0.6\n"});
      break;
    case FigureId::fig5:
      cfg = layered({kMaterial, kFig5});
      break;
    case FigureId::fig6a:
      cfg = layered({kMaterial, kFig6, "operating_point.kappa = 0.01\n"});
      break;
    case FigureId::fig6b:
      cfg = layered({kMaterial, kFig6, "operating_point.kappa = 0.001\n"});
      break;
    case FigureId::custom:
      cfg = layered({kMaterial, kSurface, kFig2, kCustom});
      break;
  }
  cfg.set("figure", to_string(id));
  return cfg;
}

}  // namespace slabqo::cli
