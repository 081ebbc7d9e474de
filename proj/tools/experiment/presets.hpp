#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "experiment/run_config.hpp"

namespace branewalk::experiment {

// Figure presets. Throws ConfigError (key "preset") for an unknown name.
RunConfig preset_config(std::string_view name);

std::vector<std::string> preset_names();

// One-paragraph description, shown by the CLI.
std::string_view preset_help(std::string_view name);

}  // namespace branewalk::experiment
