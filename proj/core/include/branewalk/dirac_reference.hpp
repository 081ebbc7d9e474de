#pragma once

#include <cstddef>

#include "branewalk/coins.hpp"
#include "branewalk/spinor_field.hpp"

namespace branewalk {

// d/dt psi = [kinetic_x d/dx + kinetic_y d/dy - i * mass_scale * theta_bar(y) * mass] psi
struct DiracOperator2d {
  Coin2x2 kinetic_x;
  Coin2x2 kinetic_y;
  Coin2x2 mass;
  double mass_scale = 1.0;

  // sigma_z d/dx - sigma_y d/dy - i sigma_x theta_bar, the covariant
  // 2+1 form with gamma0 = -sigma_x, gamma1 = -i sigma_y.
  static DiracOperator2d covariant_form();

  // First-order generator of the walk S_y Q+ S_x Q- in its own spinor basis:
  // sigma_y d/dx + sigma_z d/dy - 2 i sigma_x theta_bar. The two Q coins each
  // contribute -epsilon * theta_bar to the angle, hence the factor 2.
  static DiracOperator2d walk_limit();

  // exp(-i pi/4 sigma_x): maps the walk_limit kinetic matrices onto the
  // covariant_form ones (sigma_y -> sigma_z, sigma_z -> -sigma_y) and leaves
  // sigma_x alone.
  static Coin2x2 walk_to_covariant_basis();
};

struct DiracSolution {
  SpinorField field;
  std::size_t steps = 0;
  double dt = 0.0;          // step actually used (t_final / steps)
  double norm_drift = 0.0;  // max |norm - initial norm| over the run
};

// Largest stable step for the 4-stage Runge-Kutta integrator:
// dt * omega_max <= 2.5, with
//   omega_max = (pi / epsilon) * (|kinetic_x| + |kinetic_y|) + |mass_scale| |mass| max|theta_bar|
// (spectral norms), which bounds the spectral radius of the semi-discrete
// operator. The RK4 stability region reaches 2 sqrt(2) on the imaginary axis.
double max_stable_dt(const LatticeGeometry& geometry, const DomainWallParams& params, const DiracOperator2d& op,
                     AngleMode mode = AngleMode::Physical);

// Method of lines on the periodic grid of `initial`: Fourier derivatives in
// x and y (Nyquist mode dropped), classical RK4 in time. The wall is
// evaluated on the grid's y coordinates; params.epsilon is ignored in
// favour of the grid spacing.
//
// Throws std::invalid_argument if dt exceeds max_stable_dt, and
// std::runtime_error if the norm drifts by more than 1e-4.
DiracSolution dirac_evolve_2d(const SpinorField& initial, const DomainWallParams& params, double t_final, double dt,
                              const DiracOperator2d& op = DiracOperator2d::walk_limit(),
                              AngleMode mode = AngleMode::Physical);

}  // namespace branewalk
