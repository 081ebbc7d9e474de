#include "branewalk/clifford.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

#include "branewalk/dense_operator.hpp"
#include "branewalk/gamma.hpp"

namespace branewalk {

namespace {

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

Eigen::Matrix4cd anticommutator(const Eigen::Matrix4cd& a, const Eigen::Matrix4cd& b) { return a * b + b * a; }

}  // namespace

bool CliffordReport::passed() const { return failures().empty(); }

std::vector<std::string> CliffordReport::failures() const {
  std::vector<std::string> out;
  if (!zeroth_order_ok) {
    out.push_back("zeroth-order condition R_z R_x R_y = 1 violated (residual " + std::to_string(zeroth_order_residual) +
                  ")");
  }
  for (const auto& r : relations)
    if (!r.passed) out.push_back(r.name + " violated (residual " + std::to_string(r.residual) + ")");
  if (measured && !weyl_equivalent) {
    out.push_back("no unitary maps the measured set onto the Weyl set (residual " + std::to_string(weyl_residual) +
                  ")");
  }
  return out;
}

Eigen::Matrix4cd similarity_search(const std::vector<Eigen::Matrix4cd>& source,
                                   const std::vector<Eigen::Matrix4cd>& target, double& residual) {
  if (source.size() != target.size() || source.empty()) throw std::invalid_argument("generator sets must match");
  const std::size_t n = source.size();
  const std::size_t words = std::size_t{1} << n;

  // T = sum over monomials g of target(g) X source(g)^dagger intertwines the
  // two representations for any X; by Schur it is a multiple of a unitary.
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  Eigen::Matrix4cd best = Eigen::Matrix4cd::Identity();
  residual = std::numeric_limits<double>::infinity();
  for (int attempt = 0; attempt < 4; ++attempt) {
    Eigen::Matrix4cd x;
    for (Eigen::Index i = 0; i < 16; ++i) x(i) = {gauss(rng), gauss(rng)};
    Eigen::Matrix4cd t = Eigen::Matrix4cd::Zero();
    for (std::size_t w = 0; w < words; ++w) {
      Eigen::Matrix4cd ms = Eigen::Matrix4cd::Identity(), mt = Eigen::Matrix4cd::Identity();
      for (std::size_t i = 0; i < n; ++i) {
        if (w & (std::size_t{1} << i)) {
          ms = ms * source[i];
          mt = mt * target[i];
        }
      }
      t += mt * x * ms.adjoint();
    }
    if (t.norm() < 1e-8) continue;
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(t, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Eigen::Matrix4cd v = svd.matrixU() * svd.matrixV().adjoint();
    double res = 0.0;
    for (std::size_t i = 0; i < n; ++i) res = std::max(res, max_abs(v * source[i] * v.adjoint() - target[i]));
    if (res < residual) {
      residual = res;
      best = v;
    }
  }
  return best;
}

CliffordReport check_clifford(const StepPlan& plan, const CliffordOptions& options) {
  if (plan.flavor() != WalkFlavor::ThreeD) throw std::invalid_argument("Clifford check needs a 3D plan");
  if (options.epsilons.empty()) throw std::invalid_argument("Clifford check needs at least one epsilon");
  const double tol = options.tolerance;
  CliffordReport rep;
  rep.tolerance = tol;

  const double eps0 = options.epsilons.front();
  const std::size_t n0 = options.box_sites;
  const LatticeGeometry box({n0, n0, n0}, eps0);

  // Zeroth order: at zero momentum with theta_bar = 0 the step reduces to
  // the rotation product.
  {
    const LatticeGeometry tiny({2, 2, 2}, eps0);
    StepPlan p = plan.rescaled(tiny);
    p.set_uniform_angle(0.0, 2);
    const auto u = dense_step_matrix(p, tiny);
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(u.matrix.rows(), 4);
    for (Eigen::Index s = 0; s < 8; ++s)
      for (int c = 0; c < 4; ++c) w(s * 4 + c, c) = 1.0 / std::sqrt(8.0);
    const Eigen::MatrixXcd m = w.adjoint() * u.matrix * w;
    rep.zeroth_order_residual = max_abs(m - Eigen::MatrixXcd::Identity(4, 4));
    rep.zeroth_order_ok = rep.zeroth_order_residual <= tol;
  }

  // B_0 straight from the coupling coin.
  {
    StepPlan p = plan.rescaled(box);
    p.set_uniform_angle(options.probe_theta, n0);
    const Coin4x4 theta = gamma::kron(p.mass_factor_at(0), Coin2x2::Identity());
    const double s = std::sin(options.probe_theta * p.epsilon());
    const Eigen::Matrix4cd diff = theta - theta.adjoint();
    rep.b_0_from_coupling = Eigen::Matrix4cd::Zero();
    for (Eigen::Index i = 0; i < 16; ++i) {
      // diff = 2 i sin * B_0 for a coupling of the form cos 1 + i sin B_0
      rep.b_0_from_coupling(i) = {diff(i).imag() / (2.0 * s), -diff(i).real() / (2.0 * s)};
    }
    rep.b_0_coupling_deviation = max_abs(rep.b_0_from_coupling - gamma::b0());
  }

  // Literal closed form with Z = 1 (x) sigma_z.
  {
    const RotationSet rs = [&] {
      RotationSet r{Coin2x2::Identity(), Coin2x2::Identity(), Coin2x2::Identity()};
      for (const auto& op : plan.ops()) {
        if (const auto* ro = std::get_if<RotationOp>(&op)) {
          if (ro->label == Axis::X) r.x = ro->rotation;
          if (ro->label == Axis::Y) r.y = ro->rotation;
          if (ro->label == Axis::Z) r.z = ro->rotation;
        }
      }
      return r;
    }();
    const Eigen::Matrix4cd z = gamma::z_literal();
    const auto blk = [](const Coin2x2& r) -> Eigen::Matrix4cd { return gamma::kron(Coin2x2::Identity(), r); };
    const Eigen::Matrix4cd lx = blk(rs.z) * z * blk(rs.x) * blk(rs.y);
    const Eigen::Matrix4cd ly = blk(rs.z) * blk(rs.x) * z * blk(rs.y);
    const Eigen::Matrix4cd lz = z * blk(rs.z) * blk(rs.x) * blk(rs.y);
    const Eigen::Matrix4cd b0 = gamma::b0();
    rep.literal_z_anticommutator = std::max(
        {max_abs(anticommutator(lx, b0)), max_abs(anticommutator(ly, b0)), max_abs(anticommutator(lz, b0))});
  }

  if (!rep.zeroth_order_ok) return rep;

  // Kinetic matrices with the wall switched off.
  StepPlan free_plan = plan.rescaled(box);
  free_plan.set_uniform_angle(0.0, n0);
  const auto kin = extract_generator(free_plan, box, options.epsilons);
  rep.b_x = kin.kinetic(Axis::X);
  rep.b_y = kin.kinetic(Axis::Y);
  rep.b_z = kin.kinetic(Axis::Z);

  StepPlan massive = plan.rescaled(box);
  massive.set_uniform_angle(options.probe_theta, n0);
  const auto mass = extract_generator(massive, box, options.epsilons);
  rep.b_0 = mass.mass_term() / std::complex<double>(0.0, options.probe_theta);

  // Only the zero-momentum sector of the massive run is used.
  const double mass_residual = mass.probes.front().residual;
  rep.generator_residual = std::max(kin.residual, mass_residual);
  rep.generator_converged = kin.converged && mass_residual < 1e-12;
  rep.measured = true;

  const Eigen::Matrix4cd id = Eigen::Matrix4cd::Identity();
  const std::vector<std::pair<std::string, const Eigen::Matrix4cd*>> b{
      {"B_x", &rep.b_x}, {"B_y", &rep.b_y}, {"B_z", &rep.b_z}, {"B_0", &rep.b_0}};
  auto add = [&](std::string name, double residual) {
    rep.relations.push_back({std::move(name), residual, residual <= tol});
  };
  for (const auto& [name, m] : b) add(name + "^2 = 1", max_abs((*m) * (*m) - id));
  for (std::size_t i = 0; i < b.size(); ++i)
    for (std::size_t j = i + 1; j < b.size(); ++j)
      add("{" + b[i].first + ", " + b[j].first + "} = 0", max_abs(anticommutator(*b[i].second, *b[j].second)));
  add("B_0 = sigma_x (x) 1", max_abs(rep.b_0 - gamma::b0()));

  const Eigen::Matrix4cd g0 = gamma::weyl_gamma(0);
  const std::vector<Eigen::Matrix4cd> target{g0 * gamma::weyl_gamma(1), g0 * gamma::weyl_gamma(2),
                                             g0 * gamma::weyl_gamma(3), g0};
  rep.weyl_basis_change = similarity_search({rep.b_x, rep.b_y, rep.b_z, rep.b_0}, target, rep.weyl_residual);
  rep.weyl_equivalent = rep.weyl_residual <= tol;
  return rep;
}

}  // namespace branewalk
