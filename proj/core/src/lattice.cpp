#include "branewalk/lattice.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace branewalk {

std::string_view axis_name(Axis axis) {
  switch (axis) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    case Axis::Z: return "z";
  }
  return "?";
}

Axis axis_from_index(int index) {
  if (index < 0 || index > 2) throw std::invalid_argument("axis index must be 0, 1 or 2");
  return static_cast<Axis>(index);
}

namespace {

std::vector<std::ptrdiff_t> midpoint_origin(const std::vector<std::size_t>& sizes) {
  std::vector<std::ptrdiff_t> origin;
  origin.reserve(sizes.size());
  for (auto n : sizes) origin.push_back(static_cast<std::ptrdiff_t>(n / 2));
  return origin;
}

}  // namespace

LatticeGeometry::LatticeGeometry(std::vector<std::size_t> sizes, double epsilon)
    : LatticeGeometry(sizes, epsilon, midpoint_origin(sizes)) {}

LatticeGeometry::LatticeGeometry(std::vector<std::size_t> sizes, double epsilon,
                                 std::vector<std::ptrdiff_t> origin)
    : dims_(static_cast<int>(sizes.size())), epsilon_(epsilon) {
  if (dims_ < 1 || dims_ > 3) throw std::invalid_argument("lattice must have 1, 2 or 3 axes");
  if (origin.size() != sizes.size()) throw std::invalid_argument("origin must have one entry per axis");
  if (!(epsilon > 0.0) || !std::isfinite(epsilon)) throw std::invalid_argument("epsilon must be positive");
  for (int a = 0; a < dims_; ++a) {
    if (sizes[a] < 2) throw std::invalid_argument("every lattice axis needs at least 2 sites");
    sizes_[a] = sizes[a];
    origin_[a] = origin[a];
  }
}

std::size_t LatticeGeometry::stride(Axis axis) const {
  switch (axis) {
    case Axis::X: return 1;
    case Axis::Y: return sizes_[0];
    case Axis::Z: return sizes_[0] * sizes_[1];
  }
  return 0;
}

double LatticeGeometry::coordinate(Axis axis, std::size_t index) const {
  return static_cast<double>(static_cast<std::ptrdiff_t>(index) - origin(axis)) * epsilon_;
}

bool LatticeGeometry::contains(Axis axis, double coordinate) const {
  if (!has_axis(axis)) return false;
  const double lo = this->coordinate(axis, 0);
  const double hi = this->coordinate(axis, size(axis) - 1);
  // half a spacing of slack so that rounding at the end sites is accepted
  return coordinate >= lo - 0.5 * epsilon_ && coordinate <= hi + 0.5 * epsilon_;
}

std::size_t LatticeGeometry::nearest_index(Axis axis, double coordinate) const {
  if (!contains(axis, coordinate)) {
    throw std::domain_error("coordinate " + std::to_string(coordinate) + " lies outside the lattice along " +
                            std::string(axis_name(axis)));
  }
  const auto k = static_cast<std::ptrdiff_t>(std::llround(coordinate / epsilon_)) + origin(axis);
  const auto last = static_cast<std::ptrdiff_t>(size(axis)) - 1;
  return static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(k, 0, last));
}

SiteIndex LatticeGeometry::indices(std::size_t site) const {
  SiteIndex idx{};
  idx[0] = site % sizes_[0];
  site /= sizes_[0];
  idx[1] = site % sizes_[1];
  idx[2] = site / sizes_[1];
  return idx;
}

LatticeGeometry LatticeGeometry::with_epsilon(double epsilon) const {
  std::vector<std::size_t> sizes(sizes_.begin(), sizes_.begin() + dims_);
  std::vector<std::ptrdiff_t> origin(origin_.begin(), origin_.begin() + dims_);
  return LatticeGeometry(std::move(sizes), epsilon, std::move(origin));
}

}  // namespace branewalk
