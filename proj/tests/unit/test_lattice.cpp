#include <gtest/gtest.h>

#include "branewalk/lattice.hpp"

using namespace branewalk;

TEST(Lattice, DefaultOriginIsMidpoint) {
  LatticeGeometry g({128, 64}, 0.04);
  EXPECT_EQ(g.dims(), 2);
  EXPECT_EQ(g.origin(Axis::X), 64);
  EXPECT_EQ(g.origin(Axis::Y), 32);
  EXPECT_DOUBLE_EQ(g.coordinate(Axis::X, 64), 0.0);
  EXPECT_DOUBLE_EQ(g.coordinate(Axis::X, 65), 0.04);
  EXPECT_FALSE(g.has_axis(Axis::Z));
  EXPECT_EQ(g.size(Axis::Z), 1u);
  EXPECT_EQ(g.num_sites(), 128u * 64u);
}

TEST(Lattice, RejectsBadShapes) {
  EXPECT_THROW(LatticeGeometry({1, 4}, 0.1), std::invalid_argument);
  EXPECT_THROW(LatticeGeometry({4, 4}, 0.0), std::invalid_argument);
  EXPECT_THROW(LatticeGeometry({4, 4}, -1.0), std::invalid_argument);
  EXPECT_THROW(LatticeGeometry({}, 0.1), std::invalid_argument);
  EXPECT_THROW(LatticeGeometry({2, 2, 2, 2}, 0.1), std::invalid_argument);
}

TEST(Lattice, SiteOrderIsXFastest) {
  LatticeGeometry g({3, 4, 5}, 0.1);
  EXPECT_EQ(g.site({1, 0, 0}), 1u);
  EXPECT_EQ(g.site({0, 1, 0}), 3u);
  EXPECT_EQ(g.site({0, 0, 1}), 12u);
  EXPECT_EQ(g.stride(Axis::Z), 12u);
  for (std::size_t s = 0; s < g.num_sites(); ++s) EXPECT_EQ(g.site(g.indices(s)), s);
}

TEST(Lattice, CoordinateRoundTrip) {
  LatticeGeometry g({17, 10}, 0.03);
  for (Axis a : {Axis::X, Axis::Y})
    for (std::size_t k = 0; k < g.size(a); ++k) EXPECT_EQ(g.nearest_index(a, g.coordinate(a, k)), k);
}

TEST(Lattice, NearestIndexOutsideThrows) {
  LatticeGeometry g({8, 8}, 0.1);
  EXPECT_THROW(g.nearest_index(Axis::X, 5.0), std::domain_error);
  EXPECT_TRUE(g.contains(Axis::X, g.coordinate(Axis::X, 7)));
  EXPECT_FALSE(g.contains(Axis::X, 1.0));
}

TEST(Lattice, WrapIndex) {
  EXPECT_EQ(wrap_index(-1, 8), 7u);
  EXPECT_EQ(wrap_index(8, 8), 0u);
  EXPECT_EQ(wrap_index(-17, 8), 7u);
}

TEST(Lattice, WithEpsilonKeepsShape) {
  LatticeGeometry g({8, 6}, 0.1);
  auto h = g.with_epsilon(0.05);
  EXPECT_EQ(h.size(Axis::Y), 6u);
  EXPECT_EQ(h.origin(Axis::Y), g.origin(Axis::Y));
  EXPECT_DOUBLE_EQ(h.epsilon(), 0.05);
  EXPECT_FALSE(g == h);
}
