#include "experiment/run.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>

#include <json.hpp>

#include "branewalk/walk_engine.hpp"
#include "experiment/reports.hpp"

namespace branewalk::experiment {
namespace {

void append_double(std::string& out, double v) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  out.append(buf, end);
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f) throw OutputError("cannot open " + path.string() + " for writing");
  f.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  f.close();
  if (!f) throw OutputError("failed writing " + path.string());
}

}  // namespace

std::string snapshot_name(std::size_t step) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "density_j%04zu.csv", step);
  return buf;
}

std::string series_csv(const ObservableSeries& series) {
  static constexpr const char* kAxes[] = {"x", "y", "z"};
  const int dims = series.dims();
  std::string out = "j,t,norm";
  for (int a = 0; a < dims; ++a) out += std::string(",mean_") + kAxes[a];
  for (int a = 0; a < dims; ++a) out += std::string(",sigma_") + kAxes[a];
  out += '\n';
  for (const auto& r : series.records()) {
    out += std::to_string(r.step);
    out += ',';
    append_double(out, r.time);
    out += ',';
    append_double(out, r.norm);
    for (int a = 0; a < dims; ++a) out += ',', append_double(out, r.mean[a]);
    for (int a = 0; a < dims; ++a) out += ',', append_double(out, r.sigma[a]);
    out += '\n';
  }
  return out;
}

std::string density_csv(const Density& density) {
  const auto& g = density.geometry;
  const int dims = g.dims();
  std::string out = dims == 2 ? "p,q,density\n" : dims == 3 ? "p,q,r,density\n" : "p,density\n";
  out.reserve(out.size() + density.values.size() * 32);
  for (std::size_t s = 0; s < density.values.size(); ++s) {
    const auto idx = g.indices(s);
    for (int a = 0; a < dims; ++a) {
      out += std::to_string(idx[a]);
      out += ',';
    }
    append_double(out, density.values[s]);
    out += '\n';
  }
  return out;
}

RunSummary run_experiment(const RunConfig& config) {
  validate(config);
  const std::filesystem::path dir = config.out_dir;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir))
    throw OutputError("cannot create output directory " + dir.string() + ": " + ec.message());

  const auto geometry = config.geometry();
  const auto plan = config.plan();
  const auto initial = make_gaussian_packet(geometry, config.packet());

  RunSummary summary;
  summary.out_dir = dir;

  EvolveOptions options;
  options.cadence = config.cadence;
  options.check_wrap = config.wrap_warning;
  options.observers.push_back(
      {config.snapshot_every > 0 ? config.snapshot_every : std::max<std::size_t>(config.steps, 1),
       [&](std::size_t j, const SpinorField& field) {
         const auto name = snapshot_name(j);
         write_file(dir / name, density_csv(probability_density(field)));
         summary.snapshot_files.push_back(name);
       }});

  const double initial_norm = total_norm(initial);
  ObservableSeries series(geometry.dims());
  series.append(measure(probability_density(initial), 0));
  auto result = evolve(initial, plan, config.steps, options);
  for (const auto& r : result.series.records()) series.append(r);

  summary.series = std::move(series);
  summary.warnings = std::move(result.warnings);
  summary.first_wrap_step = result.first_wrap_step;
  summary.max_norm_drift = result.max_norm_drift;
  summary.final_norm = total_norm(result.field);

  write_file(dir / "series.csv", series_csv(summary.series));

  nlohmann::ordered_json meta;
  meta["tool"] = "branewalk";
  meta["version"] = BRANEWALK_VERSION;
  meta["config"] = config_json(config);
  meta["config_text"] = to_text(config);
  meta["angle_mode"] = config.angle_mode == AngleMode::Physical ? "physical" : "index";
  meta["conventions"] = {
      {"component_order", config.flavor == WalkFlavor::TwoD ? "up,down" : "psi1_up,psi1_down,psi2_up,psi2_down"},
      {"coordinates", "x = (p - size/2) * epsilon, periodic on every axis"},
      {"center_units", "site indices"},
      {"width", "standard deviation of the initial density, physical units"},
      {"sigma", "population standard deviation of each marginal, physical units"},
      {"density_order", "x fastest, then y, then z"},
      {"time", "t = j * epsilon"},
  };
  meta["norm"] = {{"initial", initial_norm},
                  {"final", summary.final_norm},
                  {"max_drift", summary.max_norm_drift}};
  meta["steps"] = config.steps;
  meta["series"] = "series.csv";
  meta["snapshots"] = summary.snapshot_files;
  meta["warnings"] = summary.warnings;
  if (summary.first_wrap_step) meta["first_wrap_step"] = *summary.first_wrap_step;
  else meta["first_wrap_step"] = nullptr;
  write_file(dir / "meta.json", meta.dump(2) + "\n");
  return summary;
}

}  // namespace branewalk::experiment
