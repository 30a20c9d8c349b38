// Command-line front end: run a figure preset or custom sweep, or validate a config.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "slabqo/errors.hpp"
#include "slabqo/runner.hpp"

namespace {

int do_run(const std::string& config_path, const std::optional<std::string>& figure,
           const std::optional<std::string>& out_dir, const std::optional<std::string>& format,
           std::vector<std::string> overrides) {
  using namespace slabqo::cli;
  if (out_dir) overrides.push_back("output.dir=" + *out_dir);
  if (format) overrides.push_back("output.format=" + *format);
  const RunConfig rc = resolve(assemble_config(config_path, figure, overrides));
  const RunSummary summary = run(rc);
  for (const auto& f : summary.files) std::cout << f << "\n";
  if (summary.flagged > 0) {
    std::cerr << "warning: " << summary.flagged << " grid point(s) failed and are flagged; see manifest.json\n";
    return kExitPartial;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace slabqo::cli;
  CLI::App app{"slabqo: photon statistics behind a Lorentz-medium slab"};
  app.set_version_flag("--version", version_string());
  app.require_subcommand(1);

  std::string config_path;
  std::optional<std::string> figure, out_dir, format;
  std::vector<std::string> overrides;
  auto* run_cmd = app.add_subcommand("run", "compute a dataset and write it with a manifest");
  run_cmd->add_option("--config", config_path, "key = value config file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--figure", figure, "fig2 | fig3a | fig3b | fig4a | fig4b | fig5 | fig6a | fig6b | custom");
  run_cmd->add_option("--out", out_dir, "output directory");
  run_cmd->add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  run_cmd->add_option("--set", overrides, "key=value override (repeatable)");

  std::string validate_path;
  auto* validate_cmd = app.add_subcommand("validate", "check a config without running it");
  validate_cmd->add_option("--config", validate_path, "key = value config file")->required()->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return do_run(config_path, figure, out_dir, format, overrides);
    if (*validate_cmd) {
      ValidationReport report;
      try {
        report = validate(assemble_config(validate_path, std::nullopt, {}));
      } catch (const std::exception& e) {
        report.violations.push_back(e.what());
      }
      std::cout << report.text();
      return report.clean() ? kExitOk : kExitInvalidConfig;
    }
  } catch (const slabqo::InvalidArgument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInvalidConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return kExitOk;
}
