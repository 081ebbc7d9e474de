#pragma once

#include "branewalk/clifford.hpp"
#include "branewalk/convergence.hpp"

namespace branewalk::experiment {

// Walk vs. spectral reference on a 1.28 x 1.28 box with a 128^2 reference
// grid: m=2, lambda=1, h=1, packet width 0.15 at the wall, polarization
// (1,0), t_final = 0.24, eps in {0.08, 0.04, 0.02, 0.01}.
ConvergenceSetup standard_convergence_setup();

// Clifford check of the default 3D plan (4^3 box at eps = 0.1), optionally
// with replaced rotations.
CliffordReport standard_clifford_check(const RotationSet& rotations = rotation_set());

}  // namespace branewalk::experiment
