#include "slabqo/runner.hpp"

#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "slabqo/errors.hpp"
#include "slabqo/quadrature_observables.hpp"

#ifndef SLABQO_VERSION
#define SLABQO_VERSION "0.0.0"
#endif
#ifndef SLABQO_GIT_DESCRIBE
#define SLABQO_GIT_DESCRIBE "unknown"
#endif

namespace slabqo::cli {

namespace {

using json = nlohmann::json;

Observable parse_observable(const std::string& s) {
  if (s == "scattering") return Observable::scattering;
  if (s == "squeezing") return Observable::squeezing;
  if (s == "mandel_q") return Observable::mandel_q;
  if (s == "g2_lambda") return Observable::g2_lambda;
  if (s == "g2_tau") return Observable::g2_tau;
  throw InvalidArgument("observable must be scattering | squeezing | mandel_q | g2_lambda | g2_tau, got '" + s + "'");
}

bool needs_state(Observable o) { return o != Observable::scattering; }
bool needs_spectrum(Observable o) { return o == Observable::g2_lambda || o == Observable::g2_tau; }

std::set<std::string> known_keys() {
  std::set<std::string> keys{"figure", "observable", "operating_point.kappa"};
  for (FigureId id : all_figures()) {
    const Config preset = preset_defaults(id);
    for (const auto& kv : preset.values()) keys.insert(kv.first);
  }
  return keys;
}

// Runs `step`; an exception becomes a violation prefixed by `what`.
template <class F>
void check(ValidationReport& report, const std::string& what, F&& step) {
  try {
    step();
  } catch (const std::exception& e) {
    report.violations.push_back(what + ": " + e.what());
  }
}

Grid read_grid(const Config& cfg, const std::string& axis, bool preset, ValidationReport& report) {
  Grid g;
  const std::string p = "grid." + axis;
  check(report, p, [&] {
    g.min = cfg.get_double(p + ".min");
    g.max = cfg.get_double(p + ".max");
    g.points = cfg.get_int(p + ".points");
    if (!std::isfinite(g.min) || !std::isfinite(g.max)) throw InvalidArgument("bounds must be finite");
    if (g.points < 1) throw InvalidArgument("points must be >= 1");
    if (g.points == 1 && g.min != g.max) throw InvalidArgument("a 1-point grid needs min == max");
    if (g.points >= 2 && !(g.min < g.max)) throw InvalidArgument("grid must be strictly increasing (min < max)");
    if (preset && g.points < 2) throw InvalidArgument("figure presets need at least 2 points");
  });
  return g;
}

struct Resolved {
  RunConfig config;
  ValidationReport report;
};

Resolved resolve_all(const Config& cfg) {
  Resolved out;
  RunConfig& rc = out.config;
  ValidationReport& report = out.report;
  rc.source = cfg;

  const std::set<std::string> known = known_keys();
  for (const auto& kv : cfg.values()) {
    if (!known.count(kv.first)) report.warnings.push_back("unknown key '" + kv.first + "' is ignored");
  }

  check(report, "figure", [&] { rc.figure = parse_figure(cfg.get("figure")); });
  const bool preset = rc.figure != FigureId::custom;
  bool observable_ok = false;
  check(report, "observable", [&] {
    rc.observable = parse_observable(cfg.get("observable"));
    observable_ok = true;
  });

  bool material_ok = false;
  check(report, "material", [&] {
    rc.material = LorentzParams(cfg.get_double("material.resonance_frequency", 1.0),
                                cfg.get_double("material.plasma_ratio"), cfg.get_double("material.gamma_ratio"));
    material_ok = true;
  });
  check(report, "geometry", [&] { rc.geometry = SlabGeometry(cfg.get_double("geometry.half_thickness")); });

  check(report, "environment.theta", [&] {
    rc.thetas = cfg.get_list("environment.theta");
    for (double t : rc.thetas) static_cast<void>(ThermalEnvironment{t});
  });

  if (observable_ok && needs_state(rc.observable)) {
    check(report, "state", [&] {
      const long N = cfg.get_int("state.N");
      if (N < 1 || N > 100000) throw InvalidArgument("N must lie in [1, 100000]");
      rc.state = SphereStateParams(cfg.get_double("state.lambda", 0.0), static_cast<int>(N),
                                   {cfg.get_double("state.Z"), cfg.get_double("state.Z_imag", 0.0)});
    });
  }

  if (observable_ok) {
    switch (rc.observable) {
      case Observable::scattering:
        rc.omega = read_grid(cfg, "omega", preset, report);
        break;
      case Observable::squeezing:
      case Observable::mandel_q:
        rc.lambda = read_grid(cfg, "lambda", preset, report);
        rc.omega = read_grid(cfg, "omega", preset, report);
        break;
      case Observable::g2_lambda:
        rc.lambda = read_grid(cfg, "lambda", preset, report);
        break;
      case Observable::g2_tau:
        rc.tau = read_grid(cfg, "tau", preset, report);
        break;
    }
    if (rc.omega.points >= 1 && (rc.observable == Observable::scattering || rc.observable == Observable::squeezing ||
                                 rc.observable == Observable::mandel_q)) {
      if (!(rc.omega.min > 0.0)) report.violations.push_back("grid.omega: frequencies must be > 0");
    }
    if (rc.observable == Observable::squeezing || rc.observable == Observable::mandel_q ||
        rc.observable == Observable::g2_lambda) {
      if (rc.lambda.min < 0.0) report.violations.push_back("grid.lambda: lambda must be >= 0");
    }
    if (rc.observable == Observable::g2_tau && rc.tau.min < 0.0) {
      report.violations.push_back("grid.tau: delays must be >= 0");
    }
  }

  if (cfg.has("operating_point.kappa") && material_ok) {
    check(report, "operating_point", [&] {
      OperatingPoint op;
      op.kappa = cfg.get_double("operating_point.kappa");
      if (!(op.kappa > 0.0)) throw InvalidArgument("kappa must be > 0");
      const double w0 = rc.material.resonance_frequency;
      op.omega_ratio = frequency_for_extinction(rc.material, op.kappa, 1e-9 * w0, w0) / w0;
      op.index = refractive_index(rc.material, op.omega_ratio * w0);
      rc.operating_point = op;
    });
  }

  if (observable_ok && needs_spectrum(rc.observable)) {
    check(report, "spectrum", [&] {
      const double centre = rc.operating_point ? 1.0 : cfg.get_double("spectrum.central_frequency");
      rc.spectrum = GaussianSpectrum(cfg.get_double("spectrum.pulse_length"), centre);
      continuum_normalization(rc.state, rc.spectrum);
    });
    if (rc.spectrum.pulse_length * rc.spectrum.central_frequency < 20.0) {
      report.warnings.push_back("narrowband condition violated: L omega_c = " +
                                format_number(rc.spectrum.pulse_length * rc.spectrum.central_frequency) +
                                " < 20 c; frozen-index results are unreliable");
    }
  }

  check(report, "correlation", [&] {
    rc.correlation.prefactor = cfg.get_double("correlation.prefactor", 1.0);
    rc.correlation.relative_tolerance = cfg.get_double("correlation.relative_tolerance", 1e-10);
    rc.correlation.max_subdivisions = static_cast<int>(cfg.get_int("correlation.max_subdivisions", 20000));
    const std::string method = cfg.get_string("correlation.j2_method", "quadrature");
    if (method == "closed") {
      rc.correlation.j2_method = J2Method::closed;
    } else if (method == "quadrature") {
      rc.correlation.j2_method = J2Method::quadrature;
    } else {
      throw InvalidArgument("j2_method must be closed | quadrature");
    }
    if (!(rc.correlation.prefactor > 0.0)) throw InvalidArgument("prefactor must be > 0");
    if (!(rc.correlation.relative_tolerance > 0.0)) throw InvalidArgument("relative_tolerance must be > 0");
    if (rc.correlation.max_subdivisions < 1) throw InvalidArgument("max_subdivisions must be >= 1");
    rc.retarded_time = cfg.get_double("correlation.retarded_time", 0.0);
    rc.tau_fixed = cfg.get_double("correlation.tau", 0.0);
  });
  if (observable_ok && needs_spectrum(rc.observable) && rc.correlation.j2_method == J2Method::closed &&
      !cfg.has("operating_point.kappa")) {
    report.violations.push_back("correlation.j2_method = closed needs operating_point.kappa (a frozen-index slab)");
  }

  rc.output_dir = cfg.get_string("output.dir", "out");
  check(report, "output.format", [&] {
    const std::string f = cfg.get_string("output.format", "csv");
    if (f == "csv") {
      rc.format = OutputFormat::csv;
    } else if (f == "json") {
      rc.format = OutputFormat::json;
    } else {
      throw InvalidArgument("must be csv | json");
    }
  });
  return out;
}

std::string failure_class(std::exception_ptr p) {
  try {
    std::rethrow_exception(p);
  } catch (const ConvergenceError&) {
    return "convergence";
  } catch (const SingularityError&) {
    return "singularity";
  } catch (const PhysicalityError&) {
    return "physicality";
  } catch (const InvalidArgument&) {
    return "invalid";
  } catch (...) {
    return "error";
  }
}

std::string failure_message(std::exception_ptr p) {
  try {
    std::rethrow_exception(p);
  } catch (const std::exception& e) {
    return e.what();
  } catch (...) {
    return "unknown failure";
  }
}

// Parallel map over row indices; each worker writes only its own rows.
void fill_rows(Curve& curve, std::size_t n, std::size_t columns, unsigned threads,
               const std::function<std::vector<double>(std::size_t)>& row, std::vector<std::string>& failures) {
  curve.rows.assign(n, std::vector<double>(columns, std::nan("")));
  curve.status.assign(n, "ok");
  std::vector<std::string> messages(n);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        curve.rows[i] = row(i);
      } catch (...) {
        const auto e = std::current_exception();
        curve.status[i] = failure_class(e);
        messages[i] = failure_message(e);
      }
    }
  };
  const unsigned count = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(n)));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < count; ++t) pool.emplace_back(worker);
    worker();
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (curve.status[i] != "ok") failures.push_back(curve.name + " row " + std::to_string(i) + ": " + messages[i]);
  }
}

std::string short_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string curve_name(const RunConfig& rc, double theta) {
  const std::string base = to_string(rc.figure);
  return rc.thetas.size() > 1 ? base + "_theta" + short_number(theta) : base;
}

}  // namespace

std::vector<double> Grid::values() const {
  std::vector<double> v(static_cast<std::size_t>(points));
  for (long i = 0; i < points; ++i) {
    v[static_cast<std::size_t>(i)] =
        points == 1 ? min : (i == points - 1 ? max : min + (max - min) * static_cast<double>(i) / (points - 1));
  }
  return v;
}

Slab RunConfig::slab() const {
  if (operating_point) {
    return Slab(operating_point->index, SlabGeometry(geometry.half_thickness * operating_point->omega_ratio));
  }
  return Slab(material, geometry);
}

std::string ValidationReport::text() const {
  std::ostringstream out;
  for (const auto& v : violations) out << "violation: " << v << "\n";
  for (const auto& w : warnings) out << "warning: " << w << "\n";
  if (violations.empty()) out << (warnings.empty() ? "ok: configuration is clean\n" : "ok: no violations\n");
  return out.str();
}

Config assemble_config(const std::string& path, const std::optional<std::string>& figure,
                       const std::vector<std::string>& overrides) {
  const Config file = Config::load(path);
  Config cmdline;
  for (const auto& o : overrides) cmdline.apply_override(o);
  std::string name;
  if (figure) {
    name = *figure;
  } else if (cmdline.has("figure")) {
    name = cmdline.get("figure");
  } else if (file.has("figure")) {
    name = file.get("figure");
  } else {
    throw InvalidArgument("no figure id: set 'figure' in the config or pass --figure");
  }
  Config cfg = preset_defaults(parse_figure(name));
  cfg.merge(file);
  cfg.merge(cmdline);
  cfg.set("figure", name);
  return cfg;
}

ValidationReport validate(const Config& config) { return resolve_all(config).report; }

RunConfig resolve(const Config& config) {
  Resolved r = resolve_all(config);
  if (!r.report.clean()) {
    std::string msg = "invalid configuration";
    for (const auto& v : r.report.violations) msg += "\n  " + v;
    throw InvalidArgument(msg);
  }
  return r.config;
}

unsigned thread_count() {
  if (const char* env = std::getenv("SLABQO_THREADS")) {
    const long n = std::strtol(env, nullptr, 10);
    if (n >= 1) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

Dataset compute(const RunConfig& rc, unsigned threads) {
  if (threads == 0) threads = thread_count();
  Dataset data;
  const Slab slab = rc.slab();
  const std::string unit = rc.operating_point ? "omega_c" : "omega_0";

  auto& cut = data.cutoffs;
  cut.emplace_back("quadrature.relative_tolerance", format_number(rc.correlation.relative_tolerance));
  cut.emplace_back("quadrature.max_subdivisions", std::to_string(rc.correlation.max_subdivisions));
  cut.emplace_back("series.direct_terms", std::to_string(numerics::SeriesPolicy{}.direct_terms));
  cut.emplace_back("absorption.tolerance", format_number(kAbsorptionTolerance));
  if (rc.operating_point) {
    cut.emplace_back("operating_point.omega_c_over_omega_0", format_number(rc.operating_point->omega_ratio));
    cut.emplace_back("operating_point.eta", format_number(rc.operating_point->index.eta));
    cut.emplace_back("operating_point.kappa", format_number(rc.operating_point->index.kappa));
    cut.emplace_back("operating_point.half_thickness", format_number(slab.geometry().half_thickness));
  }
  if (needs_spectrum(rc.observable)) {
    const IntegrationWindow w = j1_window(rc.spectrum);
    cut.emplace_back("j1.window", format_number(w.lower) + " .. " + format_number(w.upper));
    for (double theta : rc.thetas) {
      if (theta > 0.0) {
        cut.emplace_back("j2.window.theta" + short_number(theta),
                         "0 .. " + format_number(j2_window(ThermalEnvironment(theta)).upper));
      }
    }
  }

  if (rc.observable == Observable::scattering) {
    Curve c;
    c.name = to_string(rc.figure);
    c.label = "reflectance, transmittance and absorptance";
    c.columns = {"omega", "R2", "T2", "A"};
    c.units = {unit, "1", "1", "1"};
    const auto omegas = rc.omega.values();
    fill_rows(c, omegas.size(), 4, threads, [&](std::size_t i) {
      const ScatteringAmplitudes a = slab.amplitudes(omegas[i]);
      return std::vector<double>{omegas[i], std::norm(a.R), std::norm(a.T), absorption(a)};
    }, data.failures);
    data.curves.push_back(std::move(c));
    return data;
  }

  for (double theta : rc.thetas) {
    const ThermalEnvironment env(theta);
    Curve c;
    c.name = curve_name(rc, theta);
    switch (rc.observable) {
      case Observable::squeezing:
      case Observable::mandel_q: {
        const bool squeeze = rc.observable == Observable::squeezing;
        c.label = squeeze ? "normally ordered quadrature variances S = 4 Var - 1" : "Mandel Q";
        c.columns = squeeze ? std::vector<std::string>{"lambda", "omega", "S_X", "S_Y"}
                            : std::vector<std::string>{"lambda", "omega", "Q"};
        c.units = squeeze ? std::vector<std::string>{"1", unit, "1", "1"}
                          : std::vector<std::string>{"1", unit, "1"};
        const auto lambdas = rc.lambda.values();
        const auto omegas = rc.omega.values();
        fill_rows(c, lambdas.size() * omegas.size(), c.columns.size(), threads, [&](std::size_t i) {
          const double lam = lambdas[i / omegas.size()];
          const double w = omegas[i % omegas.size()];
          const SphereStateParams s(lam, rc.state.N, rc.state.Z);
          const Channel ch = channel_at(slab, env, w);
          if (squeeze) {
            return std::vector<double>{
                lam, w, squeezing_parameter(quadrature_variance_closed(s, ch.T(), ch.noise, Quadrature::x)),
                squeezing_parameter(quadrature_variance_closed(s, ch.T(), ch.noise, Quadrature::y))};
          }
          return std::vector<double>{lam, w, mandel_q_closed(s, ch.T(), ch.noise)};
        }, data.failures);
        break;
      }
      case Observable::g2_lambda: {
        c.label = "g2(t_r, tau) versus lambda";
        c.columns = {"lambda", "g2"};
        c.units = {"1", "1"};
        const auto lambdas = rc.lambda.values();
        fill_rows(c, lambdas.size(), 2, threads, [&](std::size_t i) {
          const SphereStateParams s(lambdas[i], rc.state.N, rc.state.Z);
          return std::vector<double>{
              lambdas[i], g2(rc.retarded_time, rc.tau_fixed, s, rc.spectrum, env, slab, rc.correlation).g2};
        }, data.failures);
        break;
      }
      case Observable::g2_tau: {
        c.label = "g2(t_r, tau) versus delay";
        c.columns = {"tau_over_tc", "tau", "g2"};
        c.units = {theta > 0.0 ? "hbar/(k_B theta)" : "1/" + unit, "1/" + unit, "1"};
        const auto xs = rc.tau.values();
        std::optional<CorrelationSweep> sweep;
        std::exception_ptr setup_error;
        try {
          sweep.emplace(rc.retarded_time, rc.state, rc.spectrum, env, slab, rc.correlation);
        } catch (...) {
          setup_error = std::current_exception();
        }
        fill_rows(c, xs.size(), 3, threads, [&](std::size_t i) {
          if (setup_error) std::rethrow_exception(setup_error);
          const double tau = theta > 0.0 ? xs[i] / theta : xs[i];
          return std::vector<double>{xs[i], tau, sweep->at(tau).g2};
        }, data.failures);
        break;
      }
      case Observable::scattering:
        break;
    }
    data.curves.push_back(std::move(c));
  }
  return data;
}

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string version_string() { return std::string(SLABQO_VERSION) + " (" + SLABQO_GIT_DESCRIBE + ")"; }

std::string render_csv(const Curve& curve, const RunConfig& rc) {
  std::ostringstream out;
  out << "# slabqo " << SLABQO_VERSION << "\n";
  out << "# figure: " << to_string(rc.figure) << "\n";
  out << "# curve: " << curve.name << " (" << curve.label << ")\n";
  out << "# columns:";
  for (std::size_t i = 0; i < curve.columns.size(); ++i) out << " " << curve.columns[i] << " [" << curve.units[i] << "]";
  out << " status\n";
  for (const auto& [k, v] : rc.source.values()) out << "# param " << k << " = " << v << "\n";
  for (std::size_t i = 0; i < curve.columns.size(); ++i) out << curve.columns[i] << ",";
  out << "status\n";
  for (std::size_t r = 0; r < curve.rows.size(); ++r) {
    for (double v : curve.rows[r]) out << format_number(v) << ",";
    out << curve.status[r] << "\n";
  }
  return out.str();
}

std::string render_json(const Curve& curve, const RunConfig& rc) {
  json j;
  j["figure"] = to_string(rc.figure);
  j["curve"] = curve.name;
  j["label"] = curve.label;
  j["columns"] = curve.columns;
  j["units"] = curve.units;
  j["parameters"] = rc.source.values();
  j["rows"] = json::array();
  for (const auto& row : curve.rows) {
    json r = json::array();
    for (double v : row) r.push_back(std::isfinite(v) ? json(v) : json(nullptr));
    j["rows"].push_back(std::move(r));
  }
  j["status"] = curve.status;
  return j.dump(1) + "\n";
}

RunSummary run(const RunConfig& rc, unsigned threads) {
  if (threads == 0) threads = thread_count();
  const auto start = std::chrono::steady_clock::now();
  const Dataset data = compute(rc, threads);

  namespace fs = std::filesystem;
  fs::create_directories(rc.output_dir);
  RunSummary summary;
  const std::string ext = rc.format == OutputFormat::csv ? ".csv" : ".json";
  for (const Curve& c : data.curves) {
    const fs::path path = fs::path(rc.output_dir) / (c.name + ext);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw InvalidArgument("cannot write '" + path.string() + "'");
    out << (rc.format == OutputFormat::csv ? render_csv(c, rc) : render_json(c, rc));
    summary.files.push_back(path.string());
  }
  summary.flagged = data.flagged();
  summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  json m;
  m["tool"] = "slabqo";
  m["version"] = SLABQO_VERSION;
  m["git_describe"] = SLABQO_GIT_DESCRIBE;
  m["figure"] = to_string(rc.figure);
  m["config"] = rc.source.values();
  m["threads"] = threads;
  json cut = json::object();
  for (const auto& [k, v] : data.cutoffs) cut[k] = v;
  m["cutoffs"] = cut;
  m["files"] = summary.files;
  m["flagged_points"] = summary.flagged;
  m["failures"] = data.failures;
  m["wall_time_seconds"] = summary.wall_seconds;
  const fs::path manifest = fs::path(rc.output_dir) / "manifest.json";
  std::ofstream out(manifest, std::ios::binary);
  if (!out) throw InvalidArgument("cannot write '" + manifest.string() + "'");
  out << m.dump(2) << "\n";
  summary.files.push_back(manifest.string());
  return summary;
}

}  // namespace slabqo::cli
