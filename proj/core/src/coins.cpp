#include "branewalk/coins.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "branewalk/gamma.hpp"

namespace branewalk {

void DomainWallParams::validate() const {
  if (!std::isfinite(mass) || mass < 0.0) throw std::invalid_argument("mass must be non-negative");
  if (!std::isfinite(lambda) || lambda <= 0.0) throw std::invalid_argument("lambda must be positive");
  if (!std::isfinite(coupling)) throw std::invalid_argument("coupling must be finite");
  if (!std::isfinite(epsilon) || epsilon <= 0.0) throw std::invalid_argument("epsilon must be positive");
}

double DomainWallParams::asymptote() const { return std::abs(coupling) * mass / std::sqrt(lambda); }

double domain_wall_angle(const DomainWallParams& params, double y) {
  const double m = params.mass;
  return params.coupling * (m / std::sqrt(params.lambda)) * std::tanh(m * y / std::numbers::sqrt2);
}

std::vector<double> angle_profile(const DomainWallParams& params, const LatticeGeometry& geometry, Axis axis,
                                  AngleMode mode) {
  params.validate();
  if (!geometry.has_axis(axis)) throw std::invalid_argument("confining axis is not part of the lattice");
  std::vector<double> profile(geometry.size(axis));
  for (std::size_t k = 0; k < profile.size(); ++k) {
    const double arg = mode == AngleMode::Physical
                           ? geometry.coordinate(axis, k)
                           : static_cast<double>(static_cast<std::ptrdiff_t>(k) - geometry.origin(axis));
    profile[k] = domain_wall_angle(params, arg);
  }
  return profile;
}

namespace {

Coin2x2 x_rotation(double angle) {
  const std::complex<double> c(std::cos(angle), 0.0);
  const std::complex<double> is(0.0, std::sin(angle));
  Coin2x2 u;
  u << c, is, is, c;
  return u;
}

}  // namespace

Coin2x2 coin_q(int sign, double theta_bar, double epsilon) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("coin sign must be +1 or -1");
  return x_rotation(sign * std::numbers::pi / 4.0 - epsilon * theta_bar);
}

Coin2x2 mass_coupling_factor(double theta_bar, double epsilon) { return x_rotation(theta_bar * epsilon); }

Coin4x4 coin_theta_r(double theta_bar, double epsilon) {
  return gamma::kron(mass_coupling_factor(theta_bar, epsilon), Coin2x2::Identity());
}

RotationSet rotation_set() {
  const double s = 1.0 / std::numbers::sqrt2;
  const std::complex<double> i(0.0, 1.0);
  RotationSet r;
  r.x << s, s, s, -s;
  r.z << s, -i * s, i * s, -s;
  r.y = r.x * r.z;
  return r;
}

double unitarity_defect(const Eigen::MatrixXcd& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitarity_defect needs a square matrix");
  const Eigen::MatrixXcd d = u.adjoint() * u - Eigen::MatrixXcd::Identity(u.rows(), u.cols());
  return d.cwiseAbs().maxCoeff();
}

}  // namespace branewalk
