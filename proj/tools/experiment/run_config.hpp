#pragma once

#include <complex>
#include <cstddef>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "branewalk/coins.hpp"
#include "branewalk/spinor_field.hpp"
#include "branewalk/step_plan.hpp"

namespace branewalk::experiment {

// Raised for malformed, unknown, duplicate, missing or invalid keys. line()
// is 1-based, 0 when the key did not come from a document line.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string key, std::size_t line, const std::string& what);

  const std::string& key() const { return key_; }
  std::size_t line() const { return line_; }

 private:
  std::string key_;
  std::size_t line_;
};

struct RunConfig {
  WalkFlavor flavor = WalkFlavor::TwoD;
  std::vector<std::size_t> sizes{128, 128};
  double epsilon = 0.04;
  std::size_t steps = 0;
  double mass = 0.0;
  double lambda = 1.0;
  double coupling = 1.0;
  // Packet center in site indices (may be fractional), width in physical units.
  std::vector<double> center{64.0, 64.0};
  double width = 0.1;
  std::vector<std::complex<double>> polarization{1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  std::size_t cadence = 1;
  std::size_t snapshot_every = 0;  // 0: only the initial and the final state
  std::string out_dir = "out";
  std::optional<std::string> preset;
  AngleMode angle_mode = AngleMode::Physical;
  bool wrap_warning = true;

  int dims() const { return flavor == WalkFlavor::TwoD ? 2 : 3; }
  int spin_dim() const { return flavor == WalkFlavor::TwoD ? 2 : 4; }

  DomainWallParams params() const { return {mass, lambda, coupling, epsilon}; }
  LatticeGeometry geometry() const;
  GaussianPacketSpec packet() const;
  StepPlan plan() const;

  bool operator==(const RunConfig&) const = default;
};

// Key/value document, one `key = value` per line; `#` starts a comment.
//
//   preset         fig1 | fig2 | fig3 | fig4 (applied first, other keys override)
//   flavor         2d | 3d (required unless a preset is given)
//   sizes          sites per axis, e.g. `256 256`
//   epsilon steps mass lambda coupling width cadence snapshot_every
//   center         site indices per axis (default: the midpoint of `sizes`)
//   polarization   complex components, e.g. `0 1`, `1 i 1 i`, `0.5-0.5i 0`
//   out_dir        output directory
//   angle_mode     physical | index
//   wrap_warning   true | false
struct ConfigEntry {
  std::string key;
  std::string value;
  std::size_t line = 0;
};

// Splits a document into entries. Rejects malformed lines, unknown keys and
// repeated keys.
std::vector<ConfigEntry> read_entries(std::string_view text);

// Builds and validates a config from document entries; `overrides` replace
// entries with the same key.
RunConfig resolve(const std::vector<ConfigEntry>& entries, const std::vector<ConfigEntry>& overrides = {});

RunConfig parse_config(std::string_view text);

// Sets one key from its textual value. Throws ConfigError for an unknown key
// or a malformed value; cross-key invariants are left to validate().
void set_config_value(RunConfig& config, std::string_view key, std::string_view value, std::size_t line = 0);

bool is_config_key(std::string_view key);

// Throws ConfigError naming the offending key.
void validate(const RunConfig& config);

// Every key with its value, in a form parse_config reads back to an equal
// config.
std::string to_text(const RunConfig& config);

RunConfig defaults_for(WalkFlavor flavor);

std::string format_complex(std::complex<double> z);
std::complex<double> parse_complex(std::string_view token);

}  // namespace branewalk::experiment
