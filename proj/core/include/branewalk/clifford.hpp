#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "branewalk/generator.hpp"
#include "branewalk/step_plan.hpp"

namespace branewalk {

struct RelationCheck {
  std::string name;
  double residual = 0.0;  // max |entry| of the defect matrix
  bool passed = false;
};

struct CliffordOptions {
  double tolerance = 1e-10;
  // Physical box of box_sites^3 sites at spacing epsilons.front(); the
  // generator is extrapolated over `epsilons`.
  std::size_t box_sites = 4;
  std::vector<double> epsilons{0.1, 0.05};
  double probe_theta = 1.0;  // uniform theta_bar used to measure B_0
};

// Spin-space matrices of the continuum limit of a 3D plan and the checks
// run on them.
//
//   d/dt psi = (B_x d/dx + B_y d/dy + B_z d/dz + i B_0 theta_bar) psi
//
// B_x, B_y, B_z are measured from generator estimates with theta_bar = 0,
// B_0 from the zero-momentum generator at theta_bar = probe_theta.
struct CliffordReport {
  double tolerance = 0.0;

  double zeroth_order_residual = 0.0;  // |R_z R_x R_y - 1| measured at zero momentum
  bool zeroth_order_ok = false;

  bool measured = false;  // false when the zeroth-order condition failed
  Eigen::Matrix4cd b_x = Eigen::Matrix4cd::Zero();
  Eigen::Matrix4cd b_y = Eigen::Matrix4cd::Zero();
  Eigen::Matrix4cd b_z = Eigen::Matrix4cd::Zero();
  Eigen::Matrix4cd b_0 = Eigen::Matrix4cd::Zero();
  double generator_residual = 0.0;
  bool generator_converged = false;

  // (Theta - Theta^dagger) / (2 i sin(theta epsilon)) from the plan's coupling coin.
  Eigen::Matrix4cd b_0_from_coupling = Eigen::Matrix4cd::Zero();
  double b_0_coupling_deviation = 0.0;  // max |b_0_from_coupling - sigma_x (x) 1|

  std::vector<RelationCheck> relations;

  // Unitary V with V B V^dagger = (gamma0 gamma1, gamma0 gamma2, gamma0 gamma3, gamma0).
  bool weyl_equivalent = false;
  double weyl_residual = 0.0;
  Eigen::Matrix4cd weyl_basis_change = Eigen::Matrix4cd::Identity();

  // The closed form B_i = ... Z ... with Z = 1 (x) sigma_z ignores the sign
  // flip of the adjoint block shift; its B_i commute with B_0 instead of
  // anticommuting. max |{B_i^literal, B_0}| over i.
  double literal_z_anticommutator = 0.0;

  bool passed() const;
  std::vector<std::string> failures() const;
};

CliffordReport check_clifford(const StepPlan& plan, const CliffordOptions& options = {});

// Unitary V minimizing max_i |V source_i V^dagger - target_i| for two sets of
// 4x4 generators, found by averaging over the group the sets generate and
// taking the polar factor. Returns the residual through `residual`.
Eigen::Matrix4cd similarity_search(const std::vector<Eigen::Matrix4cd>& source,
                                   const std::vector<Eigen::Matrix4cd>& target, double& residual);

}  // namespace branewalk
