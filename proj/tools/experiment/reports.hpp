#pragma once

#include <Eigen/Dense>
#include <json.hpp>

#include "branewalk/clifford.hpp"
#include "branewalk/convergence.hpp"
#include "experiment/run_config.hpp"

namespace branewalk::experiment {

// Complex matrices are written as rows of [re, im] pairs.
nlohmann::ordered_json matrix_json(const Eigen::MatrixXcd& m);

nlohmann::ordered_json config_json(const RunConfig& config);
nlohmann::ordered_json clifford_json(const CliffordReport& report);
nlohmann::ordered_json convergence_json(const ConvergenceTable& table);

}  // namespace branewalk::experiment
