// branewalk: run a walk from a config file or a figure preset, or run one
// of the built-in validation checks.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "experiment/presets.hpp"
#include "experiment/reports.hpp"
#include "experiment/run.hpp"
#include "experiment/run_config.hpp"
#include "experiment/validation.hpp"

namespace {

namespace ex = branewalk::experiment;

enum ExitCode { kOk = 0, kConfigError = 1, kOutputError = 2, kCheckFailed = 3 };

std::string read_text(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ex::ConfigError("", 0, "cannot read config file " + path);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

int emit_json(const nlohmann::ordered_json& j, const std::string& out_path) {
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) {
    std::cout << text;
    return kOk;
  }
  std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
  if (!f || !(f << text)) {
    std::cerr << "error: cannot write " << out_path << "\n";
    return kOutputError;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Discrete-time quantum walk with a domain-wall coin, 2D and 3D"};
  app.set_version_flag("--version", BRANEWALK_VERSION);

  std::string config_path, preset;
  bool seedless = false;
  app.add_option("--config", config_path, "key = value run configuration")->check(CLI::ExistingFile);
  app.add_option("--preset", preset, "figure preset: fig1, fig2, fig3, fig4");

  // Flag name -> config key. Values are handed to the config parser as text.
  const std::vector<std::pair<std::string, std::string>> override_flags = {
      {"--out-dir", "out_dir"},     {"--steps", "steps"},
      {"--epsilon", "epsilon"},     {"--mass", "mass"},
      {"--lambda", "lambda"},       {"--coupling", "coupling"},
      {"--snapshot-every", "snapshot_every"}, {"--angle-mode", "angle_mode"},
  };
  std::vector<std::string> override_values(override_flags.size());
  for (std::size_t k = 0; k < override_flags.size(); ++k)
    app.add_option(override_flags[k].first, override_values[k], "overrides `" + override_flags[k].second + "`");
  app.add_flag("--seedless", seedless, "accepted for compatibility; nothing in a run is random")
      ->disable_flag_override();
  bool print_config = false;
  app.add_flag("--print-config", print_config, "print the resolved config and exit");

  auto* presets_cmd = app.add_subcommand("presets", "list the figure presets");
  std::string clifford_out, convergence_out;
  auto* clifford_cmd = app.add_subcommand("check-clifford", "Clifford relations of the 3D walk's continuum limit (JSON)");
  clifford_cmd->add_option("-o,--out", clifford_out, "write the report here instead of stdout");
  auto* convergence_cmd =
      app.add_subcommand("convergence", "2D walk vs. Dirac reference error table (JSON)");
  convergence_cmd->add_option("-o,--out", convergence_out, "write the table here instead of stdout");
  app.require_subcommand(0, 1);

  // CLI11 lets `--flag=<its own value>` through even with overrides disabled.
  for (int k = 1; k < argc; ++k) {
    if (std::string_view(argv[k]).starts_with("--seedless=")) {
      std::cerr << "--seedless takes no value\n";
      return kConfigError;
    }
  }
  CLI11_PARSE(app, argc, argv);

  if (*presets_cmd) {
    for (const auto& name : ex::preset_names()) std::cout << name << "  " << ex::preset_help(name) << "\n";
    return kOk;
  }
  if (*clifford_cmd) {
    const auto report = ex::standard_clifford_check();
    const int rc = emit_json(ex::clifford_json(report), clifford_out);
    return rc != kOk ? rc : report.passed() ? kOk : kCheckFailed;
  }
  if (*convergence_cmd) {
    const auto table = branewalk::convergence_study(ex::standard_convergence_setup());
    const int rc = emit_json(ex::convergence_json(table), convergence_out);
    return rc != kOk ? rc : table.monotone_decreasing() ? kOk : kCheckFailed;
  }

  ex::RunConfig config;
  try {
    std::vector<ex::ConfigEntry> entries;
    if (!config_path.empty()) entries = ex::read_entries(read_text(config_path));
    std::vector<ex::ConfigEntry> overrides;
    if (!preset.empty()) overrides.push_back({"preset", preset, 0});
    for (std::size_t k = 0; k < override_flags.size(); ++k)
      if (app.count(override_flags[k].first) > 0) overrides.push_back({override_flags[k].second, override_values[k], 0});
    if (entries.empty() && preset.empty())
      throw ex::ConfigError("", 0, "give --config <file> or --preset <name>");
    config = ex::resolve(entries, overrides);
  } catch (const ex::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kConfigError;
  }

  if (print_config) {
    std::cout << ex::to_text(config);
    return kOk;
  }

  try {
    const auto summary = ex::run_experiment(config);
    std::cout << "wrote " << summary.out_dir.string() << ": " << summary.series.size() << " series rows, "
              << summary.snapshot_files.size() << " snapshots, max norm drift " << summary.max_norm_drift << "\n";
    for (const auto& w : summary.warnings) std::cerr << "warning: " << w << "\n";
  } catch (const ex::OutputError& e) {
    std::cerr << "output error: " << e.what() << "\n";
    return kOutputError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kConfigError;
  }
  return kOk;
}
