#include "branewalk/convergence.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "branewalk/step_plan.hpp"
#include "branewalk/walk_engine.hpp"

namespace branewalk {

namespace {

std::size_t exact_ratio(double numerator, double denominator, const char* what) {
  const double r = numerator / denominator;
  const double n = std::round(r);
  if (n < 0.0 || std::abs(r - n) > 1e-9 * std::max(1.0, r)) {
    throw std::invalid_argument(std::string(what) + " is not an integer multiple (" + std::to_string(r) + ")");
  }
  return static_cast<std::size_t>(n);
}

}  // namespace

bool ConvergenceTable::monotone_decreasing() const {
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!(rows[i].error < rows[i - 1].error)) return false;
  return true;
}

ConvergenceTable convergence_study(const ConvergenceSetup& setup) {
  if (setup.epsilons.empty()) throw std::invalid_argument("convergence study needs at least one epsilon");
  if (setup.packet.polarization.size() != 2) throw std::invalid_argument("the 2D walk needs a 2-component packet");
  if (!(setup.domain_length > 0.0)) throw std::invalid_argument("domain length must be positive");

  const std::size_t nref = setup.reference_points;
  const double h = setup.domain_length / static_cast<double>(nref);
  std::vector<std::size_t> sites, steps;
  for (double eps : setup.epsilons) {
    if (!(eps > 0.0)) throw std::invalid_argument("epsilon must be positive");
    const std::size_t n = exact_ratio(setup.domain_length, eps, "domain length / epsilon");
    if (n < 2 || nref % n != 0) {
      throw std::invalid_argument("walk lattice of " + std::to_string(n) +
                                  " sites does not nest in the reference grid of " + std::to_string(nref));
    }
    if ((n / 2) * (nref / n) != nref / 2) {
      throw std::invalid_argument("walk lattice origin does not coincide with a reference grid point");
    }
    sites.push_back(n);
    steps.push_back(exact_ratio(setup.t_final, eps, "t_final / epsilon"));
  }

  ConvergenceTable table;
  const LatticeGeometry ref_geom({nref, nref}, h);
  const auto ref_initial = make_gaussian_packet(ref_geom, setup.packet);
  const double dt = setup.reference_dt > 0.0
                        ? setup.reference_dt
                        : *std::min_element(setup.epsilons.begin(), setup.epsilons.end()) / 10.0;
  const auto ref = dirac_evolve_2d(ref_initial, setup.params, setup.t_final, dt, setup.reference_op, setup.mode);
  table.reference_dt = ref.dt;
  table.reference_steps = ref.steps;
  table.reference_norm_drift = ref.norm_drift;
  const auto ref_density = probability_density(ref.field);

  for (std::size_t i = 0; i < setup.epsilons.size(); ++i) {
    const double eps = setup.epsilons[i];
    const std::size_t n = sites[i];
    const LatticeGeometry geom({n, n}, eps);
    DomainWallParams p = setup.params;
    p.epsilon = eps;
    const auto plan = StepPlan::walk_2d(p, geom, setup.mode);
    const auto run = evolve(make_gaussian_packet(geom, setup.packet), plan, steps[i]);
    const auto walk_density = probability_density(run.field);

    const std::size_t stride = nref / n;
    double sum = 0.0;
    for (std::size_t q = 0; q < n; ++q) {
      for (std::size_t pp = 0; pp < n; ++pp) {
        const double w = walk_density.values[q * n + pp] / (eps * eps);
        const double r = ref_density.values[(q * stride) * nref + pp * stride] / (h * h);
        sum += (w - r) * (w - r);
      }
    }
    ConvergenceRow row;
    row.epsilon = eps;
    row.sites_per_axis = n;
    row.steps = steps[i];
    row.error = std::sqrt(sum * eps * eps);
    row.walk_norm_drift = std::abs(total_norm(run.field) - 1.0);
    table.rows.push_back(row);
  }
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) {
    const double ratio = table.rows[i].error / table.rows[i + 1].error;
    table.ratios.push_back(ratio);
    table.orders.push_back(std::log(ratio) / std::log(table.rows[i].epsilon / table.rows[i + 1].epsilon));
  }
  return table;
}

}  // namespace branewalk
