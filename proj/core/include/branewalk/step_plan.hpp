#pragma once

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "branewalk/coins.hpp"
#include "branewalk/lattice.hpp"

namespace branewalk {

enum class WalkFlavor { TwoD, ThreeD };

// Sub-operations of one walk step.
struct CoinQOp {  // 2D coin Q+ or Q-, angle taken from the per-slice profile
  int sign;
};
struct ShiftOp {  // S^axis on 2-spinors, block shift diag(S, S^dagger) on 4-spinors
  Axis axis;
};
struct RotationOp {  // diag(R, R) on 4-spinors
  Axis label;
  Coin2x2 rotation;
};
struct MassCouplingOp {};  // Theta_r, angle taken from the per-slice profile

using SubOp = std::variant<CoinQOp, ShiftOp, RotationOp, MassCouplingOp>;

// Ordered sub-operations of one step plus the coin tables they need.
//
// ops() is stored in application order: ops().front() acts on the state
// first. For the default plans this is the operator product read right to
// left:
//   2D: S_y Q+ S_x Q-                  -> [Q-, S_x, Q+, S_y]
//   3D: Theta S^z R_z S^x R_x S^y R_y  -> [R_y, S^y, R_x, S^x, R_z, S^z, Theta]
class StepPlan {
 public:
  StepPlan(WalkFlavor flavor, std::vector<SubOp> ops, DomainWallParams params, Axis confining_axis,
           AngleMode mode, std::vector<double> angle_profile);

  // Domain-wall walk in 2D, wall along y.
  static StepPlan walk_2d(const DomainWallParams& params, const LatticeGeometry& geometry,
                          AngleMode mode = AngleMode::Physical);
  // Domain-wall walk in 3D, wall along z.
  static StepPlan walk_3d(const DomainWallParams& params, const LatticeGeometry& geometry,
                          AngleMode mode = AngleMode::Physical, const RotationSet& rotations = rotation_set());

  WalkFlavor flavor() const { return flavor_; }
  int spin_dim() const { return flavor_ == WalkFlavor::TwoD ? 2 : 4; }
  const std::vector<SubOp>& ops() const { return ops_; }
  const DomainWallParams& params() const { return params_; }
  double epsilon() const { return params_.epsilon; }
  Axis confining_axis() const { return confining_axis_; }
  AngleMode angle_mode() const { return mode_; }
  std::span<const double> angle_profile() const { return profile_; }
  std::size_t slices() const { return profile_.size(); }

  // Replaces theta_bar and rebuilds the coin tables.
  void set_angle_profile(std::vector<double> profile);
  // Same theta_bar on every slice.
  void set_uniform_angle(double theta_bar, std::size_t slices);
  bool has_uniform_angle() const;

  // Same ops and rotations at another spacing, re-sampled on `geometry`
  // with the wall profile (or the uniform angle, if the plan has one).
  StepPlan rescaled(const LatticeGeometry& geometry) const;

  const Coin2x2& coin_q_at(int sign, std::size_t slice) const {
    return sign > 0 ? q_plus_[slice] : q_minus_[slice];
  }
  const Coin2x2& mass_factor_at(std::size_t slice) const { return mass_[slice]; }

  // Throws std::invalid_argument if the field/plan/geometry combination is
  // inconsistent.
  void check_compatible(const LatticeGeometry& geometry, int spin_dim) const;

 private:
  void rebuild_tables();

  WalkFlavor flavor_;
  std::vector<SubOp> ops_;
  DomainWallParams params_;
  Axis confining_axis_;
  AngleMode mode_;
  std::vector<double> profile_;
  std::vector<Coin2x2> q_plus_;
  std::vector<Coin2x2> q_minus_;
  std::vector<Coin2x2> mass_;
};

}  // namespace branewalk
