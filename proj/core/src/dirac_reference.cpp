#include "branewalk/dirac_reference.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <fftw3.h>

#include "branewalk/gamma.hpp"

namespace branewalk {

namespace {

const std::complex<double> I(0.0, 1.0);

double spectral_norm(const Coin2x2& m) { return Eigen::JacobiSVD<Coin2x2>(m).singularValues()(0); }

// In-place 2D complex transform over a buffer laid out x-fastest.
class FftPlan2d {
 public:
  FftPlan2d(std::size_t nx, std::size_t ny, Amplitude* buffer, int sign) {
    auto* data = reinterpret_cast<fftw_complex*>(buffer);
    plan_ = fftw_plan_dft_2d(static_cast<int>(ny), static_cast<int>(nx), data, data, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    if (plan_ == nullptr) throw std::runtime_error("FFTW plan creation failed");
  }
  FftPlan2d(const FftPlan2d&) = delete;
  FftPlan2d& operator=(const FftPlan2d&) = delete;
  ~FftPlan2d() { fftw_destroy_plan(plan_); }

  void execute(Amplitude* buffer) const {
    auto* data = reinterpret_cast<fftw_complex*>(buffer);
    fftw_execute_dft(plan_, data, data);
  }

 private:
  fftw_plan plan_;
};

std::vector<double> wavenumbers(std::size_t n, double spacing) {
  std::vector<double> k(n, 0.0);
  const double base = 2.0 * std::numbers::pi / (static_cast<double>(n) * spacing);
  for (std::size_t j = 0; j < n; ++j) {
    const auto jj = static_cast<std::ptrdiff_t>(j);
    const auto nn = static_cast<std::ptrdiff_t>(n);
    if (2 * jj == nn) continue;  // Nyquist: derivative set to zero
    k[j] = base * static_cast<double>(2 * jj < nn ? jj : jj - nn);
  }
  return k;
}

// Right-hand side evaluator with its own scratch buffers.
class DiracRhs {
 public:
  DiracRhs(const LatticeGeometry& g, const DiracOperator2d& op, std::vector<double> wall)
      : nx_(g.size(Axis::X)),
        ny_(g.size(Axis::Y)),
        n_(nx_ * ny_),
        op_(op),
        wall_(std::move(wall)),
        kx_(wavenumbers(nx_, g.epsilon())),
        ky_(wavenumbers(ny_, g.epsilon())),
        hat_(n_),
        dx_(n_),
        dy_(n_),
        forward_(nx_, ny_, hat_.data(), FFTW_FORWARD),
        backward_dx_(nx_, ny_, dx_.data(), FFTW_BACKWARD) {}

  // out = L(in); both are interleaved 2-spinor arrays of length 2 n.
  void operator()(const std::vector<Amplitude>& in, std::vector<Amplitude>& out) {
    const double inv_n = 1.0 / static_cast<double>(n_);
    std::fill(out.begin(), out.end(), Amplitude{});
    for (int c = 0; c < 2; ++c) {
      for (std::size_t s = 0; s < n_; ++s) hat_[s] = in[2 * s + c];
      forward_.execute(hat_.data());
      for (std::size_t q = 0; q < ny_; ++q) {
        for (std::size_t p = 0; p < nx_; ++p) {
          const std::size_t s = q * nx_ + p;
          dx_[s] = I * kx_[p] * hat_[s] * inv_n;
          dy_[s] = I * ky_[q] * hat_[s] * inv_n;
        }
      }
      backward_dx_.execute(dx_.data());
      backward_dx_.execute(dy_.data());
      for (std::size_t s = 0; s < n_; ++s) {
        out[2 * s + 0] += op_.kinetic_x(0, c) * dx_[s] + op_.kinetic_y(0, c) * dy_[s];
        out[2 * s + 1] += op_.kinetic_x(1, c) * dx_[s] + op_.kinetic_y(1, c) * dy_[s];
      }
    }
    const Coin2x2 m = -I * op_.mass_scale * op_.mass;
    for (std::size_t q = 0; q < ny_; ++q) {
      const double t = wall_[q];
      if (t == 0.0) continue;
      for (std::size_t p = 0; p < nx_; ++p) {
        const std::size_t s = q * nx_ + p;
        const Amplitude a = in[2 * s], b = in[2 * s + 1];
        out[2 * s] += t * (m(0, 0) * a + m(0, 1) * b);
        out[2 * s + 1] += t * (m(1, 0) * a + m(1, 1) * b);
      }
    }
  }

 private:
  std::size_t nx_, ny_, n_;
  DiracOperator2d op_;
  std::vector<double> wall_;
  std::vector<double> kx_, ky_;
  std::vector<Amplitude> hat_, dx_, dy_;
  FftPlan2d forward_;
  FftPlan2d backward_dx_;
};

double norm_of(const std::vector<Amplitude>& v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

}  // namespace

DiracOperator2d DiracOperator2d::covariant_form() {
  return {gamma::sigma_z(), -gamma::sigma_y(), gamma::sigma_x(), 1.0};
}

DiracOperator2d DiracOperator2d::walk_limit() { return {gamma::sigma_y(), gamma::sigma_z(), gamma::sigma_x(), 2.0}; }

Coin2x2 DiracOperator2d::walk_to_covariant_basis() {
  const double c = std::cos(std::numbers::pi / 4.0);
  Coin2x2 v;
  v << c, -I * c, -I * c, c;
  return v;
}

double max_stable_dt(const LatticeGeometry& geometry, const DomainWallParams& params, const DiracOperator2d& op,
                     AngleMode mode) {
  const auto wall = angle_profile(params, geometry, Axis::Y, mode);
  double wall_max = 0.0;
  for (double t : wall) wall_max = std::max(wall_max, std::abs(t));
  const double omega = std::numbers::pi / geometry.epsilon() * (spectral_norm(op.kinetic_x) + spectral_norm(op.kinetic_y)) +
                       std::abs(op.mass_scale) * spectral_norm(op.mass) * wall_max;
  return 2.5 / omega;
}

DiracSolution dirac_evolve_2d(const SpinorField& initial, const DomainWallParams& params, double t_final, double dt,
                              const DiracOperator2d& op, AngleMode mode) {
  const auto& g = initial.geometry();
  if (g.dims() != 2 || initial.spin_dim() != 2) {
    throw std::invalid_argument("the reference solver needs a 2-component field on a 2-axis lattice");
  }
  if (!(t_final >= 0.0) || !std::isfinite(t_final)) throw std::invalid_argument("t_final must be non-negative");
  if (!(dt > 0.0)) throw std::invalid_argument("dt must be positive");
  DomainWallParams p = params;
  p.epsilon = g.epsilon();
  const double dt_max = max_stable_dt(g, p, op, mode);
  if (dt > dt_max) {
    throw std::invalid_argument("dt = " + std::to_string(dt) + " exceeds the RK4 stability bound " +
                                std::to_string(dt_max));
  }

  DiracSolution sol{initial, 0, 0.0, 0.0};
  if (t_final == 0.0) return sol;

  const auto steps = static_cast<std::size_t>(std::ceil(t_final / dt - 1e-9));
  const double h = t_final / static_cast<double>(steps);
  sol.steps = steps;
  sol.dt = h;

  DiracRhs rhs(g, op, angle_profile(p, g, Axis::Y, mode));
  const std::size_t len = initial.size();
  std::vector<Amplitude> y(initial.amplitudes().begin(), initial.amplitudes().end());
  std::vector<Amplitude> k1(len), k2(len), k3(len), k4(len), tmp(len);
  const double norm0 = norm_of(y);

  for (std::size_t j = 0; j < steps; ++j) {
    rhs(y, k1);
    for (std::size_t i = 0; i < len; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    rhs(tmp, k2);
    for (std::size_t i = 0; i < len; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    rhs(tmp, k3);
    for (std::size_t i = 0; i < len; ++i) tmp[i] = y[i] + h * k3[i];
    rhs(tmp, k4);
    for (std::size_t i = 0; i < len; ++i) y[i] += (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);

    const double drift = std::abs(norm_of(y) - norm0);
    sol.norm_drift = std::max(sol.norm_drift, drift);
    if (!(drift <= 1e-4)) {
      throw std::runtime_error("reference solver unstable: norm drift " + std::to_string(drift) + " at step " +
                               std::to_string(j + 1) + " of " + std::to_string(steps) + " (dt = " +
                               std::to_string(h) + ")");
    }
  }
  std::copy(y.begin(), y.end(), sol.field.amplitudes().begin());
  return sol;
}

}  // namespace branewalk
