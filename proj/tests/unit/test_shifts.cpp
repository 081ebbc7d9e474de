#include <gtest/gtest.h>

#include "branewalk/shifts.hpp"
#include "oracles.hpp"

using namespace branewalk;
using oracle::cd;

TEST(Shift2d, SpinUpDeltaLandsAtMinusOne) {
  LatticeGeometry g({6, 5}, 0.1);
  auto f = make_site_delta(g, {3, 2, 0}, {1.0, 0.0});
  auto out = shift_2d(f, Axis::X);
  EXPECT_EQ(out.at(g.site({2, 2, 0}), 0), cd(1.0));
  EXPECT_NEAR(total_norm(out), 1.0, 1e-15);

  auto down = shift_2d(make_site_delta(g, {3, 2, 0}, {0.0, 1.0}), Axis::Y);
  EXPECT_EQ(down.at(g.site({3, 3, 0}), 1), cd(1.0));
}

TEST(Shift2d, WrapsPeriodically) {
  LatticeGeometry g({4, 4}, 0.1);
  auto out = shift_2d(make_site_delta(g, {0, 0, 0}, {1.0, 0.0}), Axis::X);
  EXPECT_EQ(out.at(g.site({3, 0, 0}), 0), cd(1.0));
}

TEST(Shift2d, AdjointUndoesForward) {
  oracle::Rng rng(3);
  LatticeGeometry g({5, 7}, 0.1);
  auto f = oracle::random_field(rng, g, 2);
  for (Axis a : {Axis::X, Axis::Y}) {
    auto back = shift_2d(shift_2d(f, a), a, ShiftDirection::Adjoint);
    for (std::size_t k = 0; k < f.amplitudes().size(); ++k)
      EXPECT_EQ(back.amplitudes()[k], f.amplitudes()[k]);
  }
}

TEST(Shift2d, Errors) {
  LatticeGeometry g({4, 4}, 0.1);
  SpinorField f(g, 2);
  EXPECT_THROW(shift_2d(f, Axis::Z), std::invalid_argument);
  EXPECT_THROW(shift_3d_block(f, Axis::X), std::invalid_argument);
  SpinorField other(LatticeGeometry({4, 5}, 0.1), 2);
  const auto off = shift_offsets(2, ShiftDirection::Forward);
  EXPECT_THROW(gather_shift(f, other, Axis::X, off), std::invalid_argument);
}

TEST(ShiftBlock, OppositeDisplacementOfTheTwoBlocks) {
  LatticeGeometry g({5, 5, 5}, 0.1);
  const double s = 1.0 / std::sqrt(2.0);
  auto f = make_site_delta(g, {2, 2, 2}, {0.0, s, 0.0, s});
  auto out = shift_3d_block(f, Axis::Z);
  // psi1_down reads from r - 1 (moves +z), psi2_down reads from r + 1 (moves -z)
  EXPECT_NEAR(std::abs(out.at(g.site({2, 2, 3}), 1)), s, 1e-15);
  EXPECT_NEAR(std::abs(out.at(g.site({2, 2, 1}), 3)), s, 1e-15);
  EXPECT_NEAR(total_norm(out), 1.0, 1e-15);
}

TEST(ShiftBlock, FirstBlockActsLikeShift2d) {
  oracle::Rng rng(5);
  LatticeGeometry g({4, 3, 5}, 0.1);
  auto f2 = oracle::random_field(rng, g, 2);
  SpinorField f4(g, 4);
  for (std::size_t s = 0; s < g.num_sites(); ++s) {
    f4.at(s, 0) = f2.at(s, 0);
    f4.at(s, 1) = f2.at(s, 1);
  }
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    auto o2 = shift_2d(f2, a);
    auto o4 = shift_3d_block(f4, a);
    for (std::size_t s = 0; s < g.num_sites(); ++s) {
      EXPECT_EQ(o4.at(s, 0), o2.at(s, 0));
      EXPECT_EQ(o4.at(s, 1), o2.at(s, 1));
      EXPECT_EQ(o4.at(s, 2), cd(0.0));
      EXPECT_EQ(o4.at(s, 3), cd(0.0));
    }
  }
}

TEST(ShiftBlock, AdjointUndoesForward) {
  oracle::Rng rng(8);
  LatticeGeometry g({3, 4, 5}, 0.1);
  auto f = oracle::random_field(rng, g, 4);
  for (Axis a : {Axis::X, Axis::Y, Axis::Z}) {
    auto back = shift_3d_block(shift_3d_block(f, a), a, ShiftDirection::Adjoint);
    double err = 0.0;
    for (std::size_t k = 0; k < f.amplitudes().size(); ++k) err = std::max(err, std::abs(back.amplitudes()[k] - f.amplitudes()[k]));
    EXPECT_LE(err, 1e-15);
  }
}
