#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "branewalk/observables.hpp"
#include "branewalk/spinor_field.hpp"
#include "branewalk/step_plan.hpp"

namespace branewalk {

// Advances `field` by one step. `scratch` is a buffer of the same shape,
// reused by the shifts; its contents on return are unspecified.
void step_in_place(SpinorField& field, const StepPlan& plan, SpinorField& scratch);

SpinorField step(const SpinorField& field, const StepPlan& plan);

// notify(j, state after j steps) runs at j = 0, at every multiple of
// `every`, and after the final step. Observers get a read-only view and must
// not keep the reference past the call.
struct Observer {
  std::size_t every = 1;
  std::function<void(std::size_t, const SpinorField&)> notify;
};

struct EvolveOptions {
  std::size_t cadence = 1;  // series records every `cadence` steps
  bool check_wrap = false;
  std::size_t shell_width = 2;
  double shell_threshold = 1e-6;
  std::vector<Observer> observers;
};

struct EvolveResult {
  SpinorField field;
  ObservableSeries series;
  std::vector<std::string> warnings;
  double max_norm_drift = 0.0;              // max |norm - initial norm| over recorded steps
  std::optional<std::size_t> first_wrap_step;  // first recorded step whose shell mass exceeded the threshold
};

// Applies `steps` steps. The series holds a record for every j >= 1 that is
// a multiple of the cadence, and always one for the final step (none when
// steps == 0).
EvolveResult evolve(SpinorField field, const StepPlan& plan, std::size_t steps, const EvolveOptions& options = {});

}  // namespace branewalk
