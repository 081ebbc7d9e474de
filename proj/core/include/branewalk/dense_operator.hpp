#pragma once

#include <cstddef>

#include <Eigen/Dense>

#include "branewalk/spinor_field.hpp"
#include "branewalk/step_plan.hpp"

namespace branewalk {

// Largest sites * spin_dim for which an explicit step matrix is built.
inline constexpr std::size_t kDenseDimensionLimit = 4096;

// Explicit matrix of one step. Row/column index = site * spin_dim + s, the
// same order as SpinorField storage.
struct DenseOperator {
  Eigen::MatrixXcd matrix;
  LatticeGeometry geometry;
  int spin_dim;
};

// Built column by column by stepping each basis state. Throws
// std::length_error above kDenseDimensionLimit.
DenseOperator dense_step_matrix(const StepPlan& plan, const LatticeGeometry& geometry);

Eigen::VectorXcd to_vector(const SpinorField& field);
SpinorField from_vector(const Eigen::VectorXcd& v, const LatticeGeometry& geometry, int spin_dim);

}  // namespace branewalk
