#include "branewalk/gamma.hpp"

#include <stdexcept>

namespace branewalk::gamma {

namespace {
const std::complex<double> I(0.0, 1.0);
}

Eigen::Matrix2cd identity2() { return Eigen::Matrix2cd::Identity(); }

Eigen::Matrix2cd sigma_x() {
  Eigen::Matrix2cd m;
  m << 0, 1, 1, 0;
  return m;
}

Eigen::Matrix2cd sigma_y() {
  Eigen::Matrix2cd m;
  m << 0, -I, I, 0;
  return m;
}

Eigen::Matrix2cd sigma_z() {
  Eigen::Matrix2cd m;
  m << 1, 0, 0, -1;
  return m;
}

Eigen::Matrix2cd gamma2d_0() { return -sigma_x(); }
Eigen::Matrix2cd gamma2d_1() { return -I * sigma_y(); }
Eigen::Matrix2cd gamma2d_c() { return -I * sigma_z(); }

Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Eigen::Matrix4cd weyl_gamma(int mu) {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  if (mu == 0) {
    g.block<2, 2>(0, 2) = identity2();
    g.block<2, 2>(2, 0) = identity2();
    return g;
  }
  Eigen::Matrix2cd s;
  switch (mu) {
    case 1: s = sigma_x(); break;
    case 2: s = sigma_y(); break;
    case 3: s = sigma_z(); break;
    default: throw std::invalid_argument("gamma index must be 0..3");
  }
  g.block<2, 2>(0, 2) = s;
  g.block<2, 2>(2, 0) = -s;
  return g;
}

Eigen::Matrix4cd weyl_gamma5() {
  Eigen::Matrix4cd g = Eigen::Matrix4cd::Zero();
  g.block<2, 2>(0, 0) = -identity2();
  g.block<2, 2>(2, 2) = identity2();
  return g;
}

double metric(int mu, int nu) {
  if (mu != nu) return 0.0;
  return mu == 0 ? 1.0 : -1.0;
}

Eigen::Matrix4cd b0() { return kron(sigma_x(), identity2()); }

Eigen::Matrix4cd z_literal() { return kron(identity2(), sigma_z()); }

}  // namespace branewalk::gamma
