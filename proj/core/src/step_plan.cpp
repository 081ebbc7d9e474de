#include "branewalk/step_plan.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace branewalk {

StepPlan::StepPlan(WalkFlavor flavor, std::vector<SubOp> ops, DomainWallParams params, Axis confining_axis,
                   AngleMode mode, std::vector<double> angle_profile)
    : flavor_(flavor),
      ops_(std::move(ops)),
      params_(params),
      confining_axis_(confining_axis),
      mode_(mode),
      profile_(std::move(angle_profile)) {
  params_.validate();
  if (profile_.empty()) throw std::invalid_argument("angle profile must not be empty");
  for (const auto& op : ops_) {
    if (flavor_ == WalkFlavor::TwoD &&
        (std::holds_alternative<RotationOp>(op) || std::holds_alternative<MassCouplingOp>(op))) {
      throw std::invalid_argument("rotation and mass-coupling sub-operations need the 3D flavor");
    }
    if (flavor_ == WalkFlavor::ThreeD && std::holds_alternative<CoinQOp>(op)) {
      throw std::invalid_argument("Q coins need the 2D flavor");
    }
  }
  rebuild_tables();
}

StepPlan StepPlan::walk_2d(const DomainWallParams& params, const LatticeGeometry& geometry, AngleMode mode) {
  if (geometry.dims() != 2) throw std::invalid_argument("the 2D walk needs a 2-axis lattice");
  if (std::abs(geometry.epsilon() - params.epsilon) > 1e-15 * params.epsilon) {
    throw std::invalid_argument("lattice spacing and wall epsilon differ");
  }
  std::vector<SubOp> ops{CoinQOp{-1}, ShiftOp{Axis::X}, CoinQOp{+1}, ShiftOp{Axis::Y}};
  return StepPlan(WalkFlavor::TwoD, std::move(ops), params, Axis::Y, mode,
                  branewalk::angle_profile(params, geometry, Axis::Y, mode));
}

StepPlan StepPlan::walk_3d(const DomainWallParams& params, const LatticeGeometry& geometry, AngleMode mode,
                           const RotationSet& rotations) {
  if (geometry.dims() != 3) throw std::invalid_argument("the 3D walk needs a 3-axis lattice");
  if (std::abs(geometry.epsilon() - params.epsilon) > 1e-15 * params.epsilon) {
    throw std::invalid_argument("lattice spacing and wall epsilon differ");
  }
  std::vector<SubOp> ops{RotationOp{Axis::Y, rotations.y}, ShiftOp{Axis::Y}, RotationOp{Axis::X, rotations.x},
                         ShiftOp{Axis::X},                 RotationOp{Axis::Z, rotations.z}, ShiftOp{Axis::Z},
                         MassCouplingOp{}};
  return StepPlan(WalkFlavor::ThreeD, std::move(ops), params, Axis::Z, mode,
                  branewalk::angle_profile(params, geometry, Axis::Z, mode));
}

void StepPlan::set_angle_profile(std::vector<double> profile) {
  if (profile.empty()) throw std::invalid_argument("angle profile must not be empty");
  profile_ = std::move(profile);
  rebuild_tables();
}

void StepPlan::set_uniform_angle(double theta_bar, std::size_t slices) {
  set_angle_profile(std::vector<double>(slices, theta_bar));
}

bool StepPlan::has_uniform_angle() const {
  return std::all_of(profile_.begin(), profile_.end(), [&](double t) { return t == profile_.front(); });
}

StepPlan StepPlan::rescaled(const LatticeGeometry& geometry) const {
  DomainWallParams p = params_;
  p.epsilon = geometry.epsilon();
  std::vector<double> profile = has_uniform_angle()
                                    ? std::vector<double>(geometry.size(confining_axis_), profile_.front())
                                    : branewalk::angle_profile(p, geometry, confining_axis_, mode_);
  return StepPlan(flavor_, ops_, p, confining_axis_, mode_, std::move(profile));
}

void StepPlan::check_compatible(const LatticeGeometry& geometry, int spin_dim) const {
  if (spin_dim != this->spin_dim()) {
    throw std::invalid_argument("field has " + std::to_string(spin_dim) + " components but the plan expects " +
                                std::to_string(this->spin_dim()));
  }
  const int want_dims = flavor_ == WalkFlavor::TwoD ? 2 : 3;
  if (geometry.dims() != want_dims) throw std::invalid_argument("lattice dimension does not match the walk flavor");
  if (geometry.size(confining_axis_) != profile_.size()) {
    throw std::invalid_argument("angle profile length does not match the lattice along the confining axis");
  }
  if (std::abs(geometry.epsilon() - params_.epsilon) > 1e-12 * params_.epsilon) {
    throw std::invalid_argument("lattice spacing does not match the plan epsilon");
  }
}

void StepPlan::rebuild_tables() {
  const std::size_t n = profile_.size();
  q_plus_.clear();
  q_minus_.clear();
  mass_.clear();
  if (flavor_ == WalkFlavor::TwoD) {
    q_plus_.reserve(n);
    q_minus_.reserve(n);
    for (double t : profile_) {
      q_plus_.push_back(coin_q(+1, t, params_.epsilon));
      q_minus_.push_back(coin_q(-1, t, params_.epsilon));
    }
  } else {
    mass_.reserve(n);
    for (double t : profile_) mass_.push_back(mass_coupling_factor(t, params_.epsilon));
  }
}

}  // namespace branewalk
