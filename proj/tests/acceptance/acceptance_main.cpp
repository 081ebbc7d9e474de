// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// line fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "branewalk/dense_operator.hpp"
#include "branewalk/gamma.hpp"
#include "branewalk/walk_engine.hpp"
#include "experiment/presets.hpp"
#include "experiment/run.hpp"
#include "experiment/validation.hpp"
#include "oracles.hpp"

using namespace branewalk;
namespace ex = branewalk::experiment;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, f, args...);
  return buf;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Outcome unitarity() {
  oracle::Rng rng(0xacce0001);
  double worst_unitary = 0.0, worst_agree = 0.0;
  for (int draw = 0; draw < 20; ++draw) {
    const int dims = draw % 2 ? 3 : 2;
    std::vector<std::size_t> sizes;
    for (int a = 0; a < dims; ++a) sizes.push_back(2 + rng.index(dims == 2 ? 9 : 4));
    const double eps = rng.uniform(0.01, 0.3);
    LatticeGeometry g(sizes, eps);
    DomainWallParams p{rng.uniform(0.0, 12.0), rng.uniform(0.1, 100.0), rng.uniform(-80.0, 80.0), eps};
    const auto mode = rng.index(2) ? AngleMode::Physical : AngleMode::Index;
    auto plan = dims == 2 ? StepPlan::walk_2d(p, g, mode) : StepPlan::walk_3d(p, g, mode);
    auto op = dense_step_matrix(plan, g);
    worst_unitary = std::max(worst_unitary, unitarity_defect(op.matrix));
    auto f = oracle::random_field(rng, g, plan.spin_dim());
    const Eigen::VectorXcd dense = op.matrix * to_vector(f);
    worst_agree = std::max(worst_agree, max_abs(to_vector(step(f, plan)) - dense));
  }
  return {worst_unitary <= 1e-12 && worst_agree <= 1e-12,
          fmt("20 draws, max |U^dag U - 1| = %.2e, max |step - dense| = %.2e (tol 1e-12)", worst_unitary, worst_agree)};
}

Outcome zeroth_order() {
  const auto r = rotation_set();
  const double zxy = max_abs(r.z * r.x * r.y - Eigen::Matrix2cd::Identity());
  const bool y_exact = (r.y.array() == (r.x * r.z).array()).all();
  return {zxy <= 1e-15 && y_exact, fmt("|R_z R_x R_y - 1| = %.2e (tol 1e-15), R_y == R_x R_z bitwise: %s", zxy,
                                       y_exact ? "yes" : "no")};
}

Outcome clifford() {
  const auto report = ex::standard_clifford_check();
  double worst = 0.0;
  bool all = report.measured;
  for (const auto& rel : report.relations) {
    if (rel.name.starts_with("B_0 =")) continue;
    worst = std::max(worst, rel.residual);
    all = all && rel.residual <= 1e-10;
  }
  const double b0_measured = max_abs(report.b_0 - gamma::b0());
  const bool b0_exact = report.b_0_coupling_deviation == 0.0;
  return {all && b0_exact && b0_measured <= 1e-10,
          fmt("max relation residual %.2e (tol 1e-10); B_0 from the coupling coin deviates by %.1e (exact), measured "
              "B_0 within %.2e; Weyl similarity residual %.2e",
              worst, report.b_0_coupling_deviation, b0_measured, report.weyl_residual)};
}

Outcome convergence() {
  const auto table = convergence_study(ex::standard_convergence_setup());
  bool ratios_ok = true;
  std::string ratios;
  for (double r : table.ratios) {
    ratios_ok = ratios_ok && r >= 1.5 && r <= 4.0;
    ratios += fmt("%s%.3f", ratios.empty() ? "" : ", ", r);
  }
  std::string errors;
  for (const auto& row : table.rows) errors += fmt("%s%.3e", errors.empty() ? "" : ", ", row.error);
  return {table.monotone_decreasing() && ratios_ok,
          fmt("eps 0.08..0.01 errors [%s], ratios [%s] (need [1.5, 4]), reference drift %.1e", errors.c_str(),
              ratios.c_str(), table.reference_norm_drift)};
}

std::vector<ObservableRecord> fig2_series(double mass) {
  auto c = ex::preset_config("fig2");
  c.mass = mass;
  const auto g = c.geometry();
  auto r = evolve(make_gaussian_packet(g, c.packet()), c.plan(), c.steps);
  return r.series.records();
}

double spread(const std::vector<double>& v) {
  const auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return (*hi - *lo) / *lo;
}

Outcome localization() {
  const auto steps = ex::preset_config("fig2").steps;
  const double m_large = ex::preset_config("fig2").mass;

  const auto free = fig2_series(0.0);
  std::vector<double> free_y;
  for (const auto& r : free)
    if (r.step >= steps - steps / 4) free_y.push_back(r.sigma[1] / r.time);
  const double free_spread = spread(free_y);

  const auto massive = fig2_series(m_large);
  std::vector<double> mx, my;
  for (const auto& r : massive)
    if (r.step >= steps / 2) mx.push_back(r.sigma[0] / r.time), my.push_back(r.sigma[1] / r.time);
  int rises = 0;
  for (std::size_t k = 1; k < my.size(); ++k) rises += my[k] >= my[k - 1];
  const double x_spread = spread(mx);

  return {free_spread < 0.10 && rises == 0 && x_spread < 0.10,
          fmt("(a) m=0: sigma_y/t over j=%zu..%zu varies %.1f%% (< 10%%); (b) m=%g: sigma_y/t %.4f -> %.4f with %d "
              "non-decreasing steps over j=%zu..%zu (need 0), sigma_x/t varies %.1f%% (< 10%%)",
              steps - steps / 4, steps, 100 * free_spread, m_large, my.front(), my.back(), rises, steps / 2, steps,
              100 * x_spread)};
}

Outcome confinement() {
  auto run = [](double mass) {
    auto c = ex::preset_config("fig4");
    c.mass = mass;
    auto r = evolve(make_gaussian_packet(c.geometry(), c.packet()), c.plan(), c.steps);
    return std::pair{r.series.records(), probability_density(r.field)};
  };
  const auto cfg = ex::preset_config("fig4");
  const double half_width = cfg.epsilon;  // one site, fixed at the first oracle run
  const auto [wall_series, wall_density] = run(cfg.mass);
  const auto [free_series, free_density] = run(0.0);
  const double wall_slab = slab_mass(wall_density, Axis::Z, 0.0, half_width);
  const double free_slab = slab_mass(free_density, Axis::Z, 0.0, half_width);
  const double ratio = wall_slab / free_slab;

  const auto& mid = wall_series[cfg.steps / 2 - 1];
  const auto& end = wall_series.back();
  auto growth = [&](int a) { return end.sigma[a] / mid.sigma[a] - 1.0; };
  const bool z_saturates = growth(2) < 0.10;
  const bool xy_grow = growth(0) > 0.10 && growth(1) > 0.10;
  return {ratio >= 2.0 && z_saturates && xy_grow,
          fmt("slab |z| <= %.2f: m=%g %.4f vs m=0 %.4f, ratio %.2f (need >= 2); growth j=%zu->%zu: sigma_z %+.1f%% "
              "(saturation needs < 10%%), sigma_x %+.1f%%, sigma_y %+.1f%% (need > 10%%)",
              half_width, cfg.mass, wall_slab, free_slab, ratio, mid.step, end.step, 100 * growth(2),
              100 * growth(0), 100 * growth(1))};
}

Outcome block_decoupling() {
  LatticeGeometry g({32, 32, 32}, 0.04);
  auto plan = StepPlan::walk_3d({0.0, 90.0, 4.0, 0.04}, g);
  auto f = make_gaussian_packet(g, {{0.0, 0.0, 0.0}, 0.1, {0.6, std::complex<double>(0.0, 0.8), 0.0, 0.0}});
  SpinorField scratch(g, 4);
  double worst = 0.0;
  for (int j = 1; j <= 50; ++j) {
    step_in_place(f, plan, scratch);
    double block2 = 0.0;
    for (std::size_t s = 0; s < g.num_sites(); ++s) block2 += std::norm(f.at(s, 2)) + std::norm(f.at(s, 3));
    worst = std::max(worst, block2);
  }
  return {worst < 1e-14, fmt("max psi2 norm over 50 steps %.1e (need < 1e-14)", worst)};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

Outcome determinism() {
  const auto root = fs::temp_directory_path() / "branewalk_acceptance";
  fs::remove_all(root);
  std::size_t compared = 0;
  bool same = true;
  for (const char* preset : {"fig2", "fig3"}) {
    std::vector<fs::path> dirs;
    for (const char* tag : {"a", "b"}) {
      auto c = ex::preset_config(preset);
      c.out_dir = (root / (std::string(preset) + "_" + tag)).string();
      ex::run_experiment(c);
      dirs.emplace_back(c.out_dir);
    }
    for (const auto& entry : fs::directory_iterator(dirs[0])) {
      if (entry.path().extension() != ".csv") continue;
      same = same && fs::exists(dirs[1] / entry.path().filename()) &&
             slurp(entry.path()) == slurp(dirs[1] / entry.path().filename());
      ++compared;
    }
  }
  fs::remove_all(root);
  return {same && compared > 0, fmt("fig2 and fig3 run twice, %zu CSV files compared byte for byte: %s", compared,
                                    same ? "identical" : "DIFFERENT")};
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"unitarity", unitarity},
      {"zeroth-order condition", zeroth_order},
      {"clifford relations", clifford},
      {"continuum convergence", convergence},
      {"localization (2D)", localization},
      {"confinement (3D)", confinement},
      {"block decoupling", block_decoupling},
      {"determinism", determinism},
  };
  int failures = 0;
  for (const auto& [name, check] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
    failures += !o.pass;
  }
  return failures == 0 ? 0 : 1;
}
