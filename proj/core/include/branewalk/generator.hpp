#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "branewalk/lattice.hpp"
#include "branewalk/step_plan.hpp"

namespace branewalk {

// Generator of the walk restricted to one plane-wave sector.
struct ProbeGenerator {
  std::array<double, 3> momentum{};  // physical momentum of the plane wave
  Eigen::MatrixXcd generator;        // spin-space matrix, extrapolated to epsilon -> 0
  std::vector<Eigen::MatrixXcd> per_epsilon;  // log(M(eps)) / eps, one per epsilon
  double residual = 0.0;  // change of this probe's extrapolant at the last refinement
};

// First-order generator G in U(eps) = 1 + eps G + O(eps^2), measured per
// momentum sector.
struct GeneratorEstimate {
  int dims = 0;
  std::vector<double> epsilons;
  // probes[0] has zero momentum, probes[1 + a] carries 2 pi / L_a along axis a.
  std::vector<ProbeGenerator> probes;
  std::vector<double> residual_history;  // change of the extrapolant per refinement
  double residual = 0.0;                 // last entry of residual_history
  bool converged = false;

  // G at zero momentum: the theta_bar term.
  const Eigen::MatrixXcd& mass_term() const { return probes.front().generator; }
  // (G(p e_axis) - G(0)) / (i p): the matrix multiplying d/d(axis).
  Eigen::MatrixXcd kinetic(Axis axis) const;
  // max over probes of |(G + G^dagger) / 2|, elementwise max norm.
  double hermitian_part_norm() const;
};

// The given geometry fixes the physical box (sizes * spacing per axis). For
// every epsilon (strictly decreasing) the plan is re-sampled on the box with
// that spacing, the dense step matrix U(eps) is built, and each probe sector
// M = W^dagger U W is taken, W being the plane wave times each spin basis
// vector. G(eps) = log(M) / eps is then Richardson-extrapolated (Neville,
// polynomial in eps) to eps = 0.
//
// The plan's angle profile must be uniform (translation invariance makes
// every plane-wave sector invariant); otherwise std::invalid_argument.
// Dense size limits apply per epsilon. The estimate is flagged as not
// converged when the residual history does not decrease, unless every
// residual is already below 1e-12.
GeneratorEstimate extract_generator(const StepPlan& plan, const LatticeGeometry& geometry,
                                    const std::vector<double>& epsilons);

}  // namespace branewalk
