#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "branewalk/lattice.hpp"

namespace branewalk {

using Amplitude = std::complex<double>;

// Walker state: spin_dim complex amplitudes per lattice site.
//
// Component order is fixed:
//   spin_dim 2: (psi_up, psi_down)
//   spin_dim 4: (psi1_up, psi1_down, psi2_up, psi2_down)
// Storage is site-major, amplitude (site, s) lives at site * spin_dim + s.
class SpinorField {
 public:
  SpinorField(LatticeGeometry geometry, int spin_dim);

  const LatticeGeometry& geometry() const { return geometry_; }
  int spin_dim() const { return spin_dim_; }
  std::size_t num_sites() const { return geometry_.num_sites(); }
  std::size_t size() const { return amplitudes_.size(); }

  std::span<Amplitude> amplitudes() { return amplitudes_; }
  std::span<const Amplitude> amplitudes() const { return amplitudes_; }

  Amplitude& at(std::size_t site, int s) { return amplitudes_[site * spin_dim_ + s]; }
  const Amplitude& at(std::size_t site, int s) const { return amplitudes_[site * spin_dim_ + s]; }

  SpinorField& operator*=(Amplitude factor);

  // Same geometry and spin_dim; amplitudes are not compared.
  bool compatible_with(const SpinorField& other) const {
    return spin_dim_ == other.spin_dim_ && geometry_ == other.geometry_;
  }

 private:
  LatticeGeometry geometry_;
  int spin_dim_;
  std::vector<Amplitude> amplitudes_;
};

struct GaussianPacketSpec {
  std::vector<double> center;  // physical coordinates, one per axis
  double width = 0.1;          // standard deviation of the density n, physical units
  std::vector<Amplitude> polarization;
};

// amplitude(site, s) = sqrt(n(site)) * polarization[s] / |polarization|, with
// n a Gaussian sampled at the site coordinates (minimal-image distance to the
// center) and renormalized so the field has unit norm.
SpinorField make_gaussian_packet(const LatticeGeometry& geometry, const GaussianPacketSpec& spec);

// Single-site state with the given (normalized) polarization.
SpinorField make_site_delta(const LatticeGeometry& geometry, const SiteIndex& site,
                            std::vector<Amplitude> polarization);

double total_norm(const SpinorField& field);

// Per-site probability, sum over spin components of |amplitude|^2.
struct Density {
  LatticeGeometry geometry;
  std::vector<double> values;

  double total() const;
};

Density probability_density(const SpinorField& field);

}  // namespace branewalk
