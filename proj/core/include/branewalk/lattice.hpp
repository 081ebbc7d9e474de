#pragma once

#include <array>
#include <cstddef>
#include <string_view>
#include <vector>

namespace branewalk {

enum class Axis : int { X = 0, Y = 1, Z = 2 };

constexpr int axis_index(Axis axis) { return static_cast<int>(axis); }
std::string_view axis_name(Axis axis);
Axis axis_from_index(int index);

using SiteIndex = std::array<std::size_t, 3>;

// Periodic lattice with one to three axes. The same spacing epsilon is used
// on every axis and doubles as the timestep of the walk.
//
// Index k on an axis sits at physical coordinate (k - origin) * epsilon.
// Sites are stored x-fastest: site = (r * ny + q) * nx + p. Unused axes have
// size 1 and origin 0.
class LatticeGeometry {
 public:
  // origin defaults to size / 2 on every axis
  LatticeGeometry(std::vector<std::size_t> sizes, double epsilon);
  LatticeGeometry(std::vector<std::size_t> sizes, double epsilon, std::vector<std::ptrdiff_t> origin);

  int dims() const { return dims_; }
  bool has_axis(Axis axis) const { return axis_index(axis) < dims_; }
  std::size_t size(Axis axis) const { return sizes_[axis_index(axis)]; }
  std::ptrdiff_t origin(Axis axis) const { return origin_[axis_index(axis)]; }
  double epsilon() const { return epsilon_; }
  std::size_t num_sites() const { return sizes_[0] * sizes_[1] * sizes_[2]; }
  std::size_t stride(Axis axis) const;

  double coordinate(Axis axis, std::size_t index) const;
  // Nearest lattice index to a physical coordinate; throws std::domain_error
  // when the coordinate lies outside [coordinate(0), coordinate(size - 1)].
  std::size_t nearest_index(Axis axis, double coordinate) const;
  bool contains(Axis axis, double coordinate) const;

  std::size_t site(const SiteIndex& index) const {
    return (index[2] * sizes_[1] + index[1]) * sizes_[0] + index[0];
  }
  SiteIndex indices(std::size_t site) const;

  // Same sizes and origin with a different spacing.
  LatticeGeometry with_epsilon(double epsilon) const;

  friend bool operator==(const LatticeGeometry&, const LatticeGeometry&) = default;

 private:
  int dims_;
  std::array<std::size_t, 3> sizes_{1, 1, 1};
  std::array<std::ptrdiff_t, 3> origin_{0, 0, 0};
  double epsilon_;
};

// Wraps a signed lattice offset into [0, size).
inline std::size_t wrap_index(std::ptrdiff_t index, std::size_t size) {
  const auto n = static_cast<std::ptrdiff_t>(size);
  std::ptrdiff_t r = index % n;
  return static_cast<std::size_t>(r < 0 ? r + n : r);
}

}  // namespace branewalk
