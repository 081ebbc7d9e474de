#include "branewalk/dense_operator.hpp"

#include <stdexcept>
#include <string>

#include "branewalk/walk_engine.hpp"

namespace branewalk {

DenseOperator dense_step_matrix(const StepPlan& plan, const LatticeGeometry& geometry) {
  const int sd = plan.spin_dim();
  const std::size_t dim = geometry.num_sites() * static_cast<std::size_t>(sd);
  if (dim > kDenseDimensionLimit) {
    throw std::length_error("dense step matrix of dimension " + std::to_string(dim) + " exceeds the limit of " +
                            std::to_string(kDenseDimensionLimit));
  }
  plan.check_compatible(geometry, sd);

  DenseOperator op{Eigen::MatrixXcd(dim, dim), geometry, sd};
  SpinorField basis(geometry, sd);
  SpinorField scratch(geometry, sd);
  for (std::size_t col = 0; col < dim; ++col) {
    auto amps = basis.amplitudes();
    std::fill(amps.begin(), amps.end(), Amplitude{});
    amps[col] = 1.0;
    step_in_place(basis, plan, scratch);
    const auto out = basis.amplitudes();
    for (std::size_t row = 0; row < dim; ++row) op.matrix(row, col) = out[row];
  }
  return op;
}

Eigen::VectorXcd to_vector(const SpinorField& field) {
  const auto amps = field.amplitudes();
  Eigen::VectorXcd v(amps.size());
  for (std::size_t i = 0; i < amps.size(); ++i) v(i) = amps[i];
  return v;
}

SpinorField from_vector(const Eigen::VectorXcd& v, const LatticeGeometry& geometry, int spin_dim) {
  SpinorField field(geometry, spin_dim);
  if (static_cast<std::size_t>(v.size()) != field.size()) throw std::invalid_argument("vector length mismatch");
  auto amps = field.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = v(i);
  return field;
}

}  // namespace branewalk
