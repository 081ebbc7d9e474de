#include <cmath>

#include <gtest/gtest.h>

#include "branewalk/dirac_reference.hpp"
#include "branewalk/gamma.hpp"

using namespace branewalk;
using cd = std::complex<double>;

namespace {

// f(x) = exp(-x^2 / (4 w^2)) on every row, spinor `pol`.
SpinorField x_profile(const LatticeGeometry& g, double shift, double w, cd a, cd b) {
  SpinorField f(g, 2);
  const double L = g.size(Axis::X) * g.epsilon();
  for (std::size_t s = 0; s < g.num_sites(); ++s) {
    double x = g.coordinate(Axis::X, g.indices(s)[0]) - shift;
    x -= L * std::round(x / L);
    const double amp = std::exp(-x * x / (4 * w * w));
    f.at(s, 0) = amp * a;
    f.at(s, 1) = amp * b;
  }
  return f;
}

double max_diff(const SpinorField& a, const SpinorField& b) {
  double e = 0.0;
  for (std::size_t k = 0; k < a.amplitudes().size(); ++k) e = std::max(e, std::abs(a.amplitudes()[k] - b.amplitudes()[k]));
  return e;
}

}  // namespace

TEST(DiracReference, ZeroFieldStaysZero) {
  LatticeGeometry g({16, 16}, 0.05);
  auto sol = dirac_evolve_2d(SpinorField(g, 2), {0.0, 1.0, 1.0, 0.05}, 0.1, 0.005);
  EXPECT_EQ(total_norm(sol.field), 0.0);
}

TEST(DiracReference, MasslessSigmaEigenstateTranslatesRigidly) {
  LatticeGeometry g({64, 8}, 0.02);
  const double s = 1.0 / std::sqrt(2.0);
  // walk_limit: d_t psi = sigma_y d_x psi; (1, i) is the +1 eigenvector, so psi(x, t) = f(x + t)
  auto init = x_profile(g, 0.0, 0.08, s, cd(0, s));
  auto sol = dirac_evolve_2d(init, {0.0, 1.0, 1.0, 0.02}, 0.32, 0.002);
  EXPECT_LT(max_diff(sol.field, x_profile(g, -0.32, 0.08, s, cd(0, s))), 1e-6);
  EXPECT_LT(sol.norm_drift, 1e-7);

  // covariant form: sigma_z d_x, spin down moves toward +x
  auto down = x_profile(g, 0.0, 0.08, 0.0, 1.0);
  auto sol2 = dirac_evolve_2d(down, {0.0, 1.0, 1.0, 0.02}, 0.32, 0.002, DiracOperator2d::covariant_form());
  EXPECT_LT(max_diff(sol2.field, x_profile(g, 0.32, 0.08, 0.0, 1.0)), 1e-6);
}

TEST(DiracReference, BasisChangeMapsWalkLimitToCovariantForm) {
  const auto v = DiracOperator2d::walk_to_covariant_basis();
  const auto w = DiracOperator2d::walk_limit(), c = DiracOperator2d::covariant_form();
  EXPECT_LT((v * w.kinetic_x * v.adjoint() - c.kinetic_x).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((v * w.kinetic_y * v.adjoint() - c.kinetic_y).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((v * w.mass * v.adjoint() - c.mass).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_EQ(w.mass_scale, 2.0);
  EXPECT_EQ(c.mass_scale, 1.0);
}

TEST(DiracReference, CovariantFormMatchesTwoDGammas) {
  // gamma0 (gamma0 d_t + gamma1 d_x + ...) structure: kinetic_x = gamma0 gamma1 up to sign conventions
  const auto c = DiracOperator2d::covariant_form();
  EXPECT_LT((c.kinetic_x - gamma::sigma_z()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((c.kinetic_y + gamma::sigma_y()).cwiseAbs().maxCoeff(), 1e-15);
  EXPECT_LT((c.mass - gamma::sigma_x()).cwiseAbs().maxCoeff(), 1e-15);
}

TEST(DiracReference, UnstableStepRejected) {
  LatticeGeometry g({32, 32}, 0.02);
  DomainWallParams p{0.0, 1.0, 1.0, 0.02};
  const double dt = max_stable_dt(g, p, DiracOperator2d::walk_limit());
  EXPECT_GT(dt, 0.0);
  EXPECT_THROW(dirac_evolve_2d(SpinorField(g, 2), p, 0.1, 2 * dt), std::invalid_argument);
}

TEST(DiracReference, WallConfinesTheYWidth) {
  LatticeGeometry g({64, 64}, 0.04);
  DomainWallParams p{4.0, 1.0, 4.0, 0.04};
  auto init = make_gaussian_packet(g, {{0.0, 0.0}, 0.1, {0.0, 1.0}});
  auto massive = dirac_evolve_2d(init, p, 0.6, 0.004);
  auto free = dirac_evolve_2d(init, {0.0, 1.0, 1.0, 0.04}, 0.6, 0.004);
  auto width_y = [&](const SpinorField& f) {
    double m2 = 0.0, tot = 0.0;
    for (std::size_t s = 0; s < g.num_sites(); ++s) {
      double w = std::norm(f.at(s, 0)) + std::norm(f.at(s, 1));
      double y = g.coordinate(Axis::Y, g.indices(s)[1]);
      m2 += w * y * y;
      tot += w;
    }
    return std::sqrt(m2 / tot);
  };
  EXPECT_LT(width_y(massive.field), 0.7 * width_y(free.field));
}
