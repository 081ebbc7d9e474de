#include "experiment/validation.hpp"

namespace branewalk::experiment {

ConvergenceSetup standard_convergence_setup() {
  ConvergenceSetup s;
  s.params = {2.0, 1.0, 1.0, 0.01};
  s.packet.center = {0.0, 0.0};
  s.packet.width = 0.15;
  s.packet.polarization = {1.0, 0.0};
  s.epsilons = {0.08, 0.04, 0.02, 0.01};
  s.t_final = 0.24;
  s.domain_length = 1.28;
  s.reference_points = 128;
  return s;
}

CliffordReport standard_clifford_check(const RotationSet& rotations) {
  const LatticeGeometry box({4, 4, 4}, 0.1);
  const DomainWallParams params{0.0, 1.0, 1.0, 0.1};
  return check_clifford(StepPlan::walk_3d(params, box, AngleMode::Physical, rotations));
}

}  // namespace branewalk::experiment
