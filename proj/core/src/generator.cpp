#include "branewalk/generator.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <unsupported/Eigen/MatrixFunctions>

#include "branewalk/dense_operator.hpp"

namespace branewalk {

namespace {

constexpr double kResidualFloor = 1e-12;

Eigen::MatrixXcd plane_wave_basis(const LatticeGeometry& g, int spin_dim, const std::array<double, 3>& momentum) {
  const auto n = g.num_sites();
  Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(n) * spin_dim, spin_dim);
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  for (std::size_t s = 0; s < n; ++s) {
    const auto idx = g.indices(s);
    double phase = 0.0;
    for (int a = 0; a < g.dims(); ++a) phase += momentum[a] * g.coordinate(axis_from_index(a), idx[a]);
    const std::complex<double> v = std::polar(scale, phase);
    for (int c = 0; c < spin_dim; ++c) w(static_cast<Eigen::Index>(s) * spin_dim + c, c) = v;
  }
  return w;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff(); }

}  // namespace

Eigen::MatrixXcd GeneratorEstimate::kinetic(Axis axis) const {
  const int a = axis_index(axis);
  if (a >= dims) throw std::invalid_argument("axis is not part of the probed lattice");
  const auto& probe = probes.at(1 + a);
  const double p = probe.momentum[a];
  return (probe.generator - probes.front().generator) / std::complex<double>(0.0, p);
}

double GeneratorEstimate::hermitian_part_norm() const {
  double worst = 0.0;
  for (const auto& probe : probes) worst = std::max(worst, max_abs(0.5 * (probe.generator + probe.generator.adjoint())));
  return worst;
}

GeneratorEstimate extract_generator(const StepPlan& plan, const LatticeGeometry& geometry,
                                    const std::vector<double>& epsilons) {
  if (epsilons.empty()) throw std::invalid_argument("generator extraction needs at least one epsilon");
  for (std::size_t i = 1; i < epsilons.size(); ++i) {
    if (!(epsilons[i] < epsilons[i - 1])) throw std::invalid_argument("epsilons must be strictly decreasing");
  }
  if (!plan.has_uniform_angle()) {
    throw std::invalid_argument("generator extraction needs a position-independent angle profile");
  }
  const int dims = geometry.dims();
  const int sd = plan.spin_dim();

  std::array<double, 3> box{};
  for (int a = 0; a < dims; ++a)
    box[a] = static_cast<double>(geometry.size(axis_from_index(a))) * geometry.epsilon();

  GeneratorEstimate est;
  est.dims = dims;
  est.epsilons = epsilons;
  est.probes.resize(1 + dims);
  for (int a = 0; a < dims; ++a) est.probes[1 + a].momentum[a] = 2.0 * std::numbers::pi / box[a];

  for (double eps : epsilons) {
    std::vector<std::size_t> sizes;
    for (int a = 0; a < dims; ++a) {
      const double n = box[a] / eps;
      const double rn = std::round(n);
      if (std::abs(n - rn) > 1e-9 * n || rn < 2.0) {
        throw std::invalid_argument("epsilon " + std::to_string(eps) + " does not tile the physical box");
      }
      sizes.push_back(static_cast<std::size_t>(rn));
    }
    const LatticeGeometry g(sizes, eps);
    const StepPlan p = plan.rescaled(g);
    const auto u = dense_step_matrix(p, g);

    for (auto& probe : est.probes) {
      const auto w = plane_wave_basis(g, sd, probe.momentum);
      const Eigen::MatrixXcd uw = u.matrix * w;
      const Eigen::MatrixXcd m = w.adjoint() * uw;
      if (max_abs(uw - w * m) > 1e-9) {
        throw std::logic_error("plane-wave sector is not invariant under the step; translation symmetry broken");
      }
      const Eigen::MatrixXcd log_m = m.log();
      probe.per_epsilon.push_back(log_m / eps);
    }
  }

  // Neville table per probe; record how much the diagonal moves each level.
  const std::size_t levels = epsilons.size();
  std::vector<double> change(levels > 1 ? levels - 1 : 0, 0.0);
  for (auto& probe : est.probes) {
    std::vector<Eigen::MatrixXcd> t = probe.per_epsilon;  // t[i] holds T_{i,k}
    Eigen::MatrixXcd previous_diag = t[0];
    probe.residual = levels > 1 ? 0.0 : std::numeric_limits<double>::infinity();
    for (std::size_t k = 1; k < levels; ++k) {
      for (std::size_t i = levels - 1; i >= k; --i) {
        const double ei = epsilons[i], eik = epsilons[i - k];
        t[i] = t[i] + (t[i] - t[i - 1]) * (ei / (eik - ei));
        if (i == k) break;
      }
      probe.residual = max_abs(t[k] - previous_diag);
      change[k - 1] = std::max(change[k - 1], probe.residual);
      previous_diag = t[k];
    }
    probe.generator = t[levels - 1];
  }
  est.residual_history = change;
  if (change.empty()) {
    est.residual = std::numeric_limits<double>::infinity();
    est.converged = false;
  } else {
    est.residual = change.back();
    bool decreasing = true;
    for (std::size_t k = 1; k < change.size(); ++k) decreasing = decreasing && change[k] < change[k - 1];
    est.converged = est.residual < kResidualFloor || decreasing;
  }
  return est;
}

}  // namespace branewalk
