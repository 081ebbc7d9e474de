#include "experiment/reports.hpp"

namespace branewalk::experiment {

nlohmann::ordered_json matrix_json(const Eigen::MatrixXcd& m) {
  auto rows = nlohmann::ordered_json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    auto row = nlohmann::ordered_json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

nlohmann::ordered_json config_json(const RunConfig& c) {
  nlohmann::ordered_json j;
  j["preset"] = c.preset ? nlohmann::ordered_json(*c.preset) : nlohmann::ordered_json(nullptr);
  j["flavor"] = c.flavor == WalkFlavor::TwoD ? "2d" : "3d";
  j["sizes"] = c.sizes;
  j["epsilon"] = c.epsilon;
  j["steps"] = c.steps;
  j["mass"] = c.mass;
  j["lambda"] = c.lambda;
  j["coupling"] = c.coupling;
  j["center"] = c.center;
  j["width"] = c.width;
  auto pol = nlohmann::ordered_json::array();
  for (auto z : c.polarization) pol.push_back({z.real(), z.imag()});
  j["polarization"] = pol;
  j["cadence"] = c.cadence;
  j["snapshot_every"] = c.snapshot_every;
  j["out_dir"] = c.out_dir;
  j["angle_mode"] = c.angle_mode == AngleMode::Physical ? "physical" : "index";
  j["wrap_warning"] = c.wrap_warning;
  return j;
}

nlohmann::ordered_json clifford_json(const CliffordReport& r) {
  nlohmann::ordered_json j;
  j["passed"] = r.passed();
  j["tolerance"] = r.tolerance;
  j["zeroth_order"] = {{"ok", r.zeroth_order_ok}, {"residual", r.zeroth_order_residual}};
  j["measured"] = r.measured;
  j["generator"] = {{"residual", r.generator_residual}, {"converged", r.generator_converged}};
  j["b_x"] = matrix_json(r.b_x);
  j["b_y"] = matrix_json(r.b_y);
  j["b_z"] = matrix_json(r.b_z);
  j["b_0"] = matrix_json(r.b_0);
  j["b_0_coupling_deviation"] = r.b_0_coupling_deviation;
  auto relations = nlohmann::ordered_json::array();
  for (const auto& rel : r.relations)
    relations.push_back({{"name", rel.name}, {"residual", rel.residual}, {"passed", rel.passed}});
  j["relations"] = relations;
  j["weyl"] = {{"equivalent", r.weyl_equivalent},
               {"residual", r.weyl_residual},
               {"basis_change", matrix_json(r.weyl_basis_change)}};
  j["literal_z_anticommutator"] = r.literal_z_anticommutator;
  j["failures"] = r.failures();
  return j;
}

nlohmann::ordered_json convergence_json(const ConvergenceTable& t) {
  nlohmann::ordered_json j;
  auto rows = nlohmann::ordered_json::array();
  for (const auto& row : t.rows)
    rows.push_back({{"epsilon", row.epsilon},
                    {"sites_per_axis", row.sites_per_axis},
                    {"steps", row.steps},
                    {"error", row.error},
                    {"walk_norm_drift", row.walk_norm_drift}});
  j["rows"] = rows;
  j["ratios"] = t.ratios;
  j["orders"] = t.orders;
  j["monotone_decreasing"] = t.monotone_decreasing();
  j["reference"] = {{"dt", t.reference_dt}, {"steps", t.reference_steps}, {"norm_drift", t.reference_norm_drift}};
  return j;
}

}  // namespace branewalk::experiment
