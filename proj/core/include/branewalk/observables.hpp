#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "branewalk/spinor_field.hpp"

namespace branewalk {

// One row of the observable time series. Positions and widths are in
// physical units; sigma is the population standard deviation.
struct ObservableRecord {
  std::size_t step = 0;
  double time = 0.0;  // step * epsilon
  double norm = 0.0;
  std::array<double, 3> mean{};
  std::array<double, 3> sigma{};
  double boundary_mass = 0.0;  // mass in the 2-site shell at the lattice edges
};

class ObservableSeries {
 public:
  explicit ObservableSeries(int dims = 0) : dims_(dims) {}

  // Throws std::invalid_argument unless record.step is larger than the last one.
  void append(const ObservableRecord& record);

  int dims() const { return dims_; }
  bool empty() const { return records_.empty(); }
  std::size_t size() const { return records_.size(); }
  const std::vector<ObservableRecord>& records() const { return records_; }
  const ObservableRecord& back() const { return records_.back(); }

 private:
  int dims_;
  std::vector<ObservableRecord> records_;
};

// Sum of the density over every axis but `axis`.
std::vector<double> axis_marginal(const Density& density, Axis axis);

// Mean and standard deviation along one axis, physical units.
//
// The periodic axis is unwrapped around the site that minimizes the second
// moment of the marginal, and every site is placed at its minimal-image
// offset from it, so a packet straddling the wrap point is measured as one
// packet. Throws std::domain_error for a
// density with zero mass.
double mean_position(const Density& density, Axis axis);
double std_dev_per_axis(const Density& density, Axis axis);

// Probability within |coordinate - center| <= half_width along `axis`
// (minimal-image distance). half_width must be >= 0.
double slab_mass(const Density& density, Axis axis, double center, double half_width);

// Probability on sites within `width` sites of either end of any axis.
double boundary_shell_mass(const Density& density, std::size_t width = 2);

ObservableRecord measure(const Density& density, std::size_t step);

}  // namespace branewalk
