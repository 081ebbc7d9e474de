#include "branewalk/observables.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace branewalk {

void ObservableSeries::append(const ObservableRecord& record) {
  if (!records_.empty() && record.step <= records_.back().step) {
    throw std::invalid_argument("observable records must have strictly increasing step index");
  }
  records_.push_back(record);
}

std::vector<double> axis_marginal(const Density& density, Axis axis) {
  const auto& g = density.geometry;
  if (!g.has_axis(axis)) throw std::invalid_argument("axis is not part of the lattice");
  std::vector<double> marginal(g.size(axis), 0.0);
  const std::size_t stride = g.stride(axis);
  const std::size_t len = g.size(axis);
  for (std::size_t s = 0; s < density.values.size(); ++s) marginal[(s / stride) % len] += density.values[s];
  return marginal;
}

namespace {

struct AxisMoments {
  double mass;
  double mean_index;  // unwrapped, may fall outside [0, L)
  double variance;    // index units
};

// Folds k - ref into [-n/2, n - n/2).
inline std::ptrdiff_t fold(std::ptrdiff_t d, std::ptrdiff_t n) {
  if (d >= n - n / 2) d -= n;
  if (d < -(n / 2)) d += n;
  return d;
}

AxisMoments axis_moments(const Density& density, Axis axis) {
  const auto marginal = axis_marginal(density, axis);
  const auto n = static_cast<std::ptrdiff_t>(marginal.size());
  double mass = 0.0;
  for (double w : marginal) mass += w;
  if (!(mass > 0.0)) throw std::domain_error("standard deviation of a density with zero mass");

  // Unwrap around the site with the smallest second moment (the Frechet
  // mean on the circle). Unlike the angular mean this stays put when the
  // marginal is bimodal with peaks more than half the axis apart. Ties keep
  // the lowest index.
  std::ptrdiff_t ref = 0;
  double best = std::numeric_limits<double>::infinity();
  for (std::ptrdiff_t c = 0; c < n; ++c) {
    double m2 = 0.0;
    for (std::ptrdiff_t k = 0; k < n; ++k) {
      const double w = marginal[static_cast<std::size_t>(k)];
      if (w == 0.0) continue;
      const auto d = static_cast<double>(fold(k - c, n));
      m2 += w * d * d;
    }
    if (m2 < best) {
      best = m2;
      ref = c;
    }
  }
  double m1 = 0.0, m2 = 0.0;
  for (std::ptrdiff_t k = 0; k < n; ++k) {
    const double w = marginal[static_cast<std::size_t>(k)];
    const auto d = static_cast<double>(fold(k - ref, n));
    m1 += w * d;
    m2 += w * d * d;
  }
  m1 /= mass;
  m2 /= mass;
  return {mass, static_cast<double>(ref) + m1, std::max(0.0, m2 - m1 * m1)};
}

}  // namespace

double mean_position(const Density& density, Axis axis) {
  const auto mom = axis_moments(density, axis);
  const auto& g = density.geometry;
  const double len = static_cast<double>(g.size(axis));
  double k = std::fmod(mom.mean_index, len);
  if (k < 0) k += len;
  return (k - static_cast<double>(g.origin(axis))) * g.epsilon();
}

double std_dev_per_axis(const Density& density, Axis axis) {
  const auto mom = axis_moments(density, axis);
  return std::sqrt(mom.variance) * density.geometry.epsilon();
}

double slab_mass(const Density& density, Axis axis, double center, double half_width) {
  if (!(half_width >= 0.0)) throw std::invalid_argument("slab half-width must be non-negative");
  const auto& g = density.geometry;
  const auto marginal = axis_marginal(density, axis);
  const double period = static_cast<double>(g.size(axis)) * g.epsilon();
  const double slack = 1e-9 * g.epsilon();
  double mass = 0.0;
  for (std::size_t k = 0; k < marginal.size(); ++k) {
    double d = g.coordinate(axis, k) - center;
    d -= period * std::floor(d / period + 0.5);
    if (std::abs(d) <= half_width + slack) mass += marginal[k];
  }
  return mass;
}

double boundary_shell_mass(const Density& density, std::size_t width) {
  const auto& g = density.geometry;
  double mass = 0.0;
  for (std::size_t s = 0; s < density.values.size(); ++s) {
    const auto idx = g.indices(s);
    bool edge = false;
    for (int a = 0; a < g.dims() && !edge; ++a) {
      const std::size_t len = g.size(axis_from_index(a));
      edge = idx[a] < width || idx[a] + width >= len;
    }
    if (edge) mass += density.values[s];
  }
  return mass;
}

ObservableRecord measure(const Density& density, std::size_t step) {
  ObservableRecord rec;
  rec.step = step;
  rec.time = static_cast<double>(step) * density.geometry.epsilon();
  rec.norm = density.total();
  for (int a = 0; a < density.geometry.dims(); ++a) {
    const Axis axis = axis_from_index(a);
    rec.mean[a] = mean_position(density, axis);
    rec.sigma[a] = std_dev_per_axis(density, axis);
  }
  rec.boundary_mass = boundary_shell_mass(density, 2);
  return rec;
}

}  // namespace branewalk
