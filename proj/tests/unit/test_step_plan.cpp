#include <gtest/gtest.h>

#include "branewalk/step_plan.hpp"

using namespace branewalk;

TEST(StepPlan, TwoDOrder) {
  LatticeGeometry g({8, 8}, 0.1);
  auto plan = StepPlan::walk_2d({1.0, 1.0, 1.0, 0.1}, g);
  ASSERT_EQ(plan.ops().size(), 4u);
  EXPECT_EQ(std::get<CoinQOp>(plan.ops()[0]).sign, -1);
  EXPECT_EQ(std::get<ShiftOp>(plan.ops()[1]).axis, Axis::X);
  EXPECT_EQ(std::get<CoinQOp>(plan.ops()[2]).sign, +1);
  EXPECT_EQ(std::get<ShiftOp>(plan.ops()[3]).axis, Axis::Y);
  EXPECT_EQ(plan.confining_axis(), Axis::Y);
  EXPECT_EQ(plan.slices(), 8u);
  EXPECT_EQ(plan.spin_dim(), 2);
}

TEST(StepPlan, ThreeDOrder) {
  LatticeGeometry g({4, 4, 6}, 0.1);
  auto plan = StepPlan::walk_3d({1.0, 1.0, 1.0, 0.1}, g);
  ASSERT_EQ(plan.ops().size(), 7u);
  EXPECT_EQ(std::get<RotationOp>(plan.ops()[0]).label, Axis::Y);
  EXPECT_EQ(std::get<ShiftOp>(plan.ops()[1]).axis, Axis::Y);
  EXPECT_EQ(std::get<RotationOp>(plan.ops()[2]).label, Axis::X);
  EXPECT_EQ(std::get<ShiftOp>(plan.ops()[3]).axis, Axis::X);
  EXPECT_EQ(std::get<RotationOp>(plan.ops()[4]).label, Axis::Z);
  EXPECT_EQ(std::get<ShiftOp>(plan.ops()[5]).axis, Axis::Z);
  EXPECT_TRUE(std::holds_alternative<MassCouplingOp>(plan.ops()[6]));
  EXPECT_EQ(plan.confining_axis(), Axis::Z);
  EXPECT_EQ(plan.slices(), 6u);
}

TEST(StepPlan, Errors) {
  LatticeGeometry g2({8, 8}, 0.1);
  LatticeGeometry g3({4, 4, 4}, 0.1);
  EXPECT_THROW(StepPlan::walk_2d({1.0, 1.0, 1.0, 0.1}, g3), std::invalid_argument);
  EXPECT_THROW(StepPlan::walk_3d({1.0, 1.0, 1.0, 0.1}, g2), std::invalid_argument);
  EXPECT_THROW(StepPlan::walk_2d({1.0, 1.0, 1.0, 0.2}, g2), std::invalid_argument);
  EXPECT_THROW(StepPlan::walk_2d({1.0, 0.0, 1.0, 0.1}, g2), std::invalid_argument);
  auto plan = StepPlan::walk_2d({1.0, 1.0, 1.0, 0.1}, g2);
  EXPECT_THROW(plan.check_compatible(g2, 4), std::invalid_argument);
  EXPECT_THROW(plan.check_compatible(LatticeGeometry({8, 6}, 0.1), 2), std::invalid_argument);
  EXPECT_NO_THROW(plan.check_compatible(g2, 2));
}

TEST(StepPlan, UniformAngleAndRescale) {
  LatticeGeometry g({4, 4, 4}, 0.1);
  auto plan = StepPlan::walk_3d({0.0, 1.0, 1.0, 0.1}, g);
  plan.set_uniform_angle(0.7, 4);
  EXPECT_TRUE(plan.has_uniform_angle());
  auto fine = plan.rescaled(LatticeGeometry({8, 8, 8}, 0.05));
  EXPECT_TRUE(fine.has_uniform_angle());
  EXPECT_EQ(fine.slices(), 8u);
  EXPECT_DOUBLE_EQ(fine.angle_profile()[3], 0.7);
  EXPECT_DOUBLE_EQ(fine.epsilon(), 0.05);

  auto wall = StepPlan::walk_2d({2.0, 1.0, 1.0, 0.1}, LatticeGeometry({8, 8}, 0.1));
  auto wall_fine = wall.rescaled(LatticeGeometry({16, 16}, 0.05));
  EXPECT_FALSE(wall_fine.has_uniform_angle());
  EXPECT_DOUBLE_EQ(wall_fine.angle_profile()[8], 0.0);
}
