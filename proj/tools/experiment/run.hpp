#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "branewalk/observables.hpp"
#include "experiment/run_config.hpp"

namespace branewalk::experiment {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunSummary {
  std::filesystem::path out_dir;
  ObservableSeries series;  // starts with the j = 0 record
  std::vector<std::string> snapshot_files;
  std::vector<std::string> warnings;
  std::optional<std::size_t> first_wrap_step;
  double max_norm_drift = 0.0;
  double final_norm = 0.0;
};

// Evolves the configured packet and writes into config.out_dir:
//   meta.json            resolved config, version, conventions, norm drift, warnings
//   series.csv           j,t,norm,mean_<axis>...,sigma_<axis>...
//   density_j<NNNN>.csv  p,q[,r],density, x fastest; at j = 0, every
//                        snapshot_every steps, and the final step
// Output is byte-identical for identical configs. Throws OutputError when
// the directory or a file cannot be written.
RunSummary run_experiment(const RunConfig& config);

std::string series_csv(const ObservableSeries& series);
std::string density_csv(const Density& density);
// density_j0012.csv; the counter has at least four digits.
std::string snapshot_name(std::size_t step);

}  // namespace branewalk::experiment
