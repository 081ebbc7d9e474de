#pragma once

#include <cstddef>
#include <vector>

#include "branewalk/coins.hpp"
#include "branewalk/dirac_reference.hpp"
#include "branewalk/spinor_field.hpp"

namespace branewalk {

// Walk-versus-continuum comparison on a shared square periodic box.
struct ConvergenceSetup {
  GaussianPacketSpec packet;  // physical center, 2-component polarization
  DomainWallParams params;    // epsilon is replaced per run
  std::vector<double> epsilons;
  double t_final = 0.0;
  double domain_length = 1.28;         // side of the box, physical units
  std::size_t reference_points = 128;  // reference grid sites per axis
  AngleMode mode = AngleMode::Physical;
  DiracOperator2d reference_op = DiracOperator2d::walk_limit();
  double reference_dt = 0.0;  // 0 selects min(epsilons) / 10
};

struct ConvergenceRow {
  double epsilon = 0.0;
  std::size_t sites_per_axis = 0;
  std::size_t steps = 0;
  double error = 0.0;  // L2 norm of the density difference, continuum normalization
  double walk_norm_drift = 0.0;
};

struct ConvergenceTable {
  std::vector<ConvergenceRow> rows;  // in the order of setup.epsilons
  std::vector<double> ratios;        // error[i] / error[i + 1]
  std::vector<double> orders;        // log(ratio) / log(eps[i] / eps[i + 1])
  double reference_dt = 0.0;
  std::size_t reference_steps = 0;
  double reference_norm_drift = 0.0;

  bool monotone_decreasing() const;
};

// Runs the 2D walk at every epsilon and the reference solver once on the
// fine grid, then compares densities at the walk sites. The walk lattices
// must nest in the reference grid (reference_points divisible by every
// domain_length / epsilon) and t_final / epsilon must be an integer;
// otherwise std::invalid_argument.
//
// error = sqrt(sum_sites (rho_walk / eps^2 - rho_ref / h^2)^2 * eps^2).
ConvergenceTable convergence_study(const ConvergenceSetup& setup);

}  // namespace branewalk
