#include <unsupported/Eigen/MatrixFunctions>

#include <gtest/gtest.h>

#include "branewalk/gamma.hpp"
#include "branewalk/generator.hpp"
#include "oracles.hpp"

using namespace branewalk;
using oracle::cd;

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

// Sector matrix of S_y Q+ S_x Q- for momentum (kx, ky): a shift that reads
// the up component from k + 1 multiplies a plane wave by exp(i k eps).
Eigen::Matrix2cd hand_sector_2d(double kx, double ky, double eps, double theta) {
  auto phase = [&](double k) {
    Eigen::Matrix2cd d = Eigen::Matrix2cd::Zero();
    d(0, 0) = std::exp(cd(0, k * eps));
    d(1, 1) = std::exp(cd(0, -k * eps));
    return d;
  };
  const auto qm = oracle::hand_x_rotation(-M_PI / 4 - eps * theta);
  const auto qp = oracle::hand_x_rotation(M_PI / 4 - eps * theta);
  return oracle::hand_product(phase(ky), oracle::hand_product(qp, oracle::hand_product(phase(kx), qm)));
}

}  // namespace

TEST(Generator, PerEpsilonSectorMatchesHandProduct) {
  LatticeGeometry box({4, 4}, 0.1);
  auto plan = StepPlan::walk_2d({0.0, 1.0, 1.0, 0.1}, box);
  plan.set_uniform_angle(0.8, 4);
  auto est = extract_generator(plan, box, {0.1, 0.05});
  ASSERT_EQ(est.probes.size(), 3u);
  const double k = 2 * M_PI / 0.4;
  for (std::size_t e = 0; e < 2; ++e) {
    const double eps = est.epsilons[e];
    const Eigen::Matrix2cd ref0 = hand_sector_2d(0.0, 0.0, eps, 0.8).log() / eps;
    const Eigen::Matrix2cd refx = hand_sector_2d(k, 0.0, eps, 0.8).log() / eps;
    const Eigen::Matrix2cd refy = hand_sector_2d(0.0, k, eps, 0.8).log() / eps;
    EXPECT_LT(max_abs(est.probes[0].per_epsilon[e] - ref0), 1e-12);
    EXPECT_LT(max_abs(est.probes[1].per_epsilon[e] - refx), 1e-12);
    EXPECT_LT(max_abs(est.probes[2].per_epsilon[e] - refy), 1e-12);
  }
}

TEST(Generator, TwoDContinuumMatrices) {
  LatticeGeometry box({4, 4}, 0.1);
  auto plan = StepPlan::walk_2d({0.0, 1.0, 1.0, 0.1}, box);
  plan.set_uniform_angle(0.0, 4);
  auto massless = extract_generator(plan, box, {0.1, 0.05, 0.025});
  EXPECT_LT(max_abs(massless.kinetic(Axis::X) - gamma::sigma_y()), 1e-8);
  EXPECT_LT(max_abs(massless.kinetic(Axis::Y) - gamma::sigma_z()), 1e-8);
  EXPECT_LT(massless.hermitian_part_norm(), 1e-8);

  plan.set_uniform_angle(0.5, 4);
  auto massive = extract_generator(plan, box, {0.1, 0.05, 0.025});
  const Eigen::Matrix2cd expected = cd(0, -2.0 * 0.5) * gamma::sigma_x();
  EXPECT_LT(max_abs(massive.mass_term() - expected), 1e-8);
}

TEST(Generator, RejectsWallAndUnsortedEpsilons) {
  LatticeGeometry box({4, 4}, 0.1);
  auto wall = StepPlan::walk_2d({2.0, 1.0, 1.0, 0.1}, box);
  EXPECT_THROW(extract_generator(wall, box, {0.1, 0.05}), std::invalid_argument);
  auto flat = StepPlan::walk_2d({0.0, 1.0, 1.0, 0.1}, box);
  EXPECT_THROW(extract_generator(flat, box, {0.05, 0.1}), std::invalid_argument);
}
