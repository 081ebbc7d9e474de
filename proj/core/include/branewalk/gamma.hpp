#pragma once

#include <Eigen/Dense>

// Constant matrices used to check the continuum identification.
namespace branewalk::gamma {

Eigen::Matrix2cd identity2();
Eigen::Matrix2cd sigma_x();
Eigen::Matrix2cd sigma_y();
Eigen::Matrix2cd sigma_z();

// 2+1 gammas of the reduced walk: gamma0 = -sigma_x, gamma1 = -i sigma_y,
// gamma_c = i gamma0 gamma1 = -i sigma_z.
Eigen::Matrix2cd gamma2d_0();
Eigen::Matrix2cd gamma2d_1();
Eigen::Matrix2cd gamma2d_c();

// a (x) b, first factor is the slow index. With the 4-spinor order
// (psi1_up, psi1_down, psi2_up, psi2_down) the first factor acts on the
// psi1/psi2 block label and the second on spin.
Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b);

// Weyl representation: gamma0 = [[0, 1], [1, 0]], gamma^i = [[0, s_i], [-s_i, 0]],
// gamma5 = [[-1, 0], [0, 1]]. mu in 0..3.
Eigen::Matrix4cd weyl_gamma(int mu);
Eigen::Matrix4cd weyl_gamma5();

// Minkowski metric diag(1, -1, -1, -1).
double metric(int mu, int nu);

// sigma_x (x) 1, the matrix multiplying i * theta_bar in the 3D generator.
Eigen::Matrix4cd b0();

// Literal I_2 (x) sigma_z, as written for Z in the first-order expansion.
Eigen::Matrix4cd z_literal();

}  // namespace branewalk::gamma
