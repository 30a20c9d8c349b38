#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slabqo/config.hpp"
#include "slabqo/correlation.hpp"
#include "slabqo/presets.hpp"

namespace slabqo::cli {

enum class Observable { scattering, squeezing, mandel_q, g2_lambda, g2_tau };
enum class OutputFormat { csv, json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidConfig = 2;
inline constexpr int kExitPartial = 3;

/// Uniform axis. A single point is allowed (min == max) for ad-hoc runs.
struct Grid {
  double min = 0.0;
  double max = 0.0;
  long points = 1;
  std::vector<double> values() const;
};

/// Pulse frequency picked on the Lorentz curve below resonance where kappa
/// reaches a target; the run then uses omega_c as its frequency unit.
struct OperatingPoint {
  double kappa = 0.0;
  double omega_ratio = 1.0;  ///< omega_c / omega_0
  ComplexIndex index{};      ///< n(omega_c)
};

struct RunConfig {
  FigureId figure = FigureId::custom;
  Observable observable = Observable::scattering;
  LorentzParams material{};
  SlabGeometry geometry{};
  SphereStateParams state{};
  std::vector<double> thetas{0.0};
  GaussianSpectrum spectrum{};
  Grid omega{}, lambda{}, tau{};
  std::optional<OperatingPoint> operating_point;
  CorrelationSettings correlation{};
  double retarded_time = 0.0;
  double tau_fixed = 0.0;  ///< delay used by g2_lambda
  std::string output_dir = "out";
  OutputFormat format = OutputFormat::csv;
  Config source;  ///< fully resolved key set, echoed into every output

  /// The slab in the run's units (frozen index and rescaled thickness at an operating point).
  Slab slab() const;
};

struct ValidationReport {
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
  bool clean() const { return violations.empty(); }
  std::string text() const;
};

/// Preset defaults for the figure, then the file, then --set overrides.
/// The figure comes from `figure` if given, else from the file's `figure` key.
Config assemble_config(const std::string& path, const std::optional<std::string>& figure,
                       const std::vector<std::string>& overrides);

/// Checks invariants and approximation preconditions without running anything.
ValidationReport validate(const Config& config);
/// Throws InvalidArgument listing every violation.
RunConfig resolve(const Config& config);

struct Curve {
  std::string name;
  std::string label;
  std::vector<std::string> columns;
  std::vector<std::string> units;
  std::vector<std::vector<double>> rows;
  std::vector<std::string> status;  ///< "ok" or the failure class of the row
};

struct Dataset {
  std::vector<Curve> curves;
  std::vector<std::pair<std::string, std::string>> cutoffs;
  std::vector<std::string> failures;
  std::size_t flagged() const { return failures.size(); }
};

/// Worker count from SLABQO_THREADS, else the hardware concurrency.
unsigned thread_count();

/// Evaluates every grid point; failing points are flagged, not fatal.
Dataset compute(const RunConfig& config, unsigned threads = 0);

/// %.17g, with "nan" / "inf" / "-inf" spelled out.
std::string format_number(double value);
std::string render_csv(const Curve& curve, const RunConfig& config);
std::string render_json(const Curve& curve, const RunConfig& config);

struct RunSummary {
  std::vector<std::string> files;
  std::size_t flagged = 0;
  double wall_seconds = 0.0;
};

/// compute() plus one data file per curve and manifest.json in config.output_dir.
RunSummary run(const RunConfig& config, unsigned threads = 0);

std::string version_string();

}  // namespace slabqo::cli
