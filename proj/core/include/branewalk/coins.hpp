#pragma once

#include <vector>

#include <Eigen/Dense>

#include "branewalk/lattice.hpp"

namespace branewalk {

using Coin2x2 = Eigen::Matrix2cd;
using Coin4x4 = Eigen::Matrix4cd;

// Parameters of the tanh domain wall that drives the coin angle.
struct DomainWallParams {
  double mass = 0.0;      // m >= 0
  double lambda = 1.0;    // self-coupling, > 0
  double coupling = 1.0;  // h
  double epsilon = 0.04;  // lattice spacing, > 0

  // Throws std::invalid_argument naming the offending field.
  void validate() const;
  double asymptote() const;  // |h| m / sqrt(lambda)
};

// How the wall coordinate is fed to tanh: the physical coordinate
// y = (q - origin) * epsilon, or the bare index offset (q - origin).
enum class AngleMode { Physical, Index };

// theta_bar(y) = h * m / sqrt(lambda) * tanh(m * y / sqrt(2))
double domain_wall_angle(const DomainWallParams& params, double y);

// theta_bar sampled once per slice along `axis`.
std::vector<double> angle_profile(const DomainWallParams& params, const LatticeGeometry& geometry, Axis axis,
                                  AngleMode mode);

// [[cos t, i sin t], [i sin t, cos t]] with t = sign * pi/4 - epsilon * theta_bar.
Coin2x2 coin_q(int sign, double theta_bar, double epsilon);

// 2x2 factor of the mass coupling, [[cos a, i sin a], [i sin a, cos a]] with
// a = theta_bar * epsilon. It mixes psi1 with psi2.
Coin2x2 mass_coupling_factor(double theta_bar, double epsilon);

// mass_coupling_factor (x) identity_2 in the (block, spin) component order.
Coin4x4 coin_theta_r(double theta_bar, double epsilon);

struct RotationSet {
  Coin2x2 x;
  Coin2x2 y;
  Coin2x2 z;
};

// R_x = Hadamard, R_z = [[1, -i], [i, -1]] / sqrt(2), R_y = R_x R_z.
RotationSet rotation_set();

// max_ij |(U^dagger U - 1)_ij|
double unitarity_defect(const Eigen::MatrixXcd& u);

}  // namespace branewalk
