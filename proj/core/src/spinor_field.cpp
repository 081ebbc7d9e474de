#include "branewalk/spinor_field.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace branewalk {

SpinorField::SpinorField(LatticeGeometry geometry, int spin_dim)
    : geometry_(std::move(geometry)), spin_dim_(spin_dim) {
  if (spin_dim != 2 && spin_dim != 4) throw std::invalid_argument("spin_dim must be 2 or 4");
  amplitudes_.assign(geometry_.num_sites() * static_cast<std::size_t>(spin_dim_), Amplitude{});
}

SpinorField& SpinorField::operator*=(Amplitude factor) {
  for (auto& a : amplitudes_) a *= factor;
  return *this;
}

namespace {

std::vector<Amplitude> normalized_polarization(std::vector<Amplitude> polarization, std::size_t spin_dim) {
  if (polarization.size() != spin_dim) {
    throw std::invalid_argument("polarization length must equal spin_dim");
  }
  double norm2 = 0.0;
  for (const auto& c : polarization) norm2 += std::norm(c);
  if (!(norm2 > 0.0) || !std::isfinite(norm2)) throw std::invalid_argument("polarization must have nonzero norm");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& c : polarization) c *= scale;
  return polarization;
}

// signed distance along a periodic axis, folded into [-L/2, L/2) * epsilon
double minimal_image(double delta, double period) {
  return delta - period * std::floor(delta / period + 0.5);
}

}  // namespace

SpinorField make_gaussian_packet(const LatticeGeometry& geometry, const GaussianPacketSpec& spec) {
  const int dims = geometry.dims();
  if (static_cast<int>(spec.center.size()) != dims) {
    throw std::invalid_argument("packet center must have one coordinate per lattice axis");
  }
  if (!(spec.width > 0.0) || !std::isfinite(spec.width)) throw std::invalid_argument("packet width must be positive");
  for (int a = 0; a < dims; ++a) {
    if (!geometry.contains(axis_from_index(a), spec.center[a])) {
      throw std::domain_error("packet center lies outside the lattice");
    }
  }
  const int spin_dim = static_cast<int>(spec.polarization.size());
  if (spin_dim != 2 && spin_dim != 4) throw std::invalid_argument("polarization must have 2 or 4 components");
  const auto pol = normalized_polarization(spec.polarization, spec.polarization.size());
  SpinorField field(geometry, spin_dim);

  // Log-weights first, shifted by their maximum, so that a packet much
  // narrower than the spacing still lands on the nearest site.
  const std::size_t n = geometry.num_sites();
  std::vector<double> log_weight(n);
  const double inv_two_var = 1.0 / (2.0 * spec.width * spec.width);
  for (std::size_t s = 0; s < n; ++s) {
    const auto idx = geometry.indices(s);
    double r2 = 0.0;
    for (int a = 0; a < dims; ++a) {
      const Axis axis = axis_from_index(a);
      const double period = static_cast<double>(geometry.size(axis)) * geometry.epsilon();
      const double d = minimal_image(geometry.coordinate(axis, idx[a]) - spec.center[a], period);
      r2 += d * d;
    }
    log_weight[s] = -r2 * inv_two_var;
  }
  const double peak = *std::max_element(log_weight.begin(), log_weight.end());
  std::vector<double> density(n);
  double mass = 0.0;
  for (std::size_t s = 0; s < n; ++s) {
    density[s] = std::exp(log_weight[s] - peak);
    mass += density[s];
  }
  for (std::size_t s = 0; s < n; ++s) {
    const double amp = std::sqrt(density[s] / mass);
    for (int c = 0; c < spin_dim; ++c) field.at(s, c) = amp * pol[c];
  }
  // One more pass so the norm is 1 to rounding rather than to the accuracy
  // of the sqrt/division above.
  const double norm = total_norm(field);
  field *= Amplitude(1.0 / std::sqrt(norm));
  return field;
}

SpinorField make_site_delta(const LatticeGeometry& geometry, const SiteIndex& site,
                            std::vector<Amplitude> polarization) {
  const auto spin_dim = polarization.size();
  if (spin_dim != 2 && spin_dim != 4) throw std::invalid_argument("polarization must have 2 or 4 components");
  const auto pol = normalized_polarization(std::move(polarization), spin_dim);
  for (int a = 0; a < geometry.dims(); ++a) {
    if (site[a] >= geometry.size(axis_from_index(a))) throw std::out_of_range("site index outside the lattice");
  }
  SpinorField field(geometry, static_cast<int>(spin_dim));
  const auto s = geometry.site(site);
  for (std::size_t c = 0; c < spin_dim; ++c) field.at(s, static_cast<int>(c)) = pol[c];
  return field;
}

double total_norm(const SpinorField& field) {
  double sum = 0.0;
  for (const auto& a : field.amplitudes()) sum += std::norm(a);
  return sum;
}

double Density::total() const { return std::accumulate(values.begin(), values.end(), 0.0); }

Density probability_density(const SpinorField& field) {
  Density density{field.geometry(), std::vector<double>(field.num_sites(), 0.0)};
  const int sd = field.spin_dim();
  for (std::size_t s = 0; s < field.num_sites(); ++s) {
    double p = 0.0;
    for (int c = 0; c < sd; ++c) p += std::norm(field.at(s, c));
    density.values[s] = p;
  }
  return density;
}

}  // namespace branewalk
