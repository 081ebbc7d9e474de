#include "experiment/run_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <functional>
#include <map>
#include <sstream>

#include "experiment/presets.hpp"

namespace branewalk::experiment {
namespace {

std::string describe(const std::string& key, std::size_t line, const std::string& what) {
  std::string out;
  if (line > 0) out += "line " + std::to_string(line) + ": ";
  if (!key.empty()) out += key + ": ";
  return out + what;
}

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == ',')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != ',') ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, end);
}

bool to_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && end == s.data() + s.size() && std::isfinite(out);
}

struct Setter {
  std::string_view key;
  std::function<void(RunConfig&, std::string_view)> apply;
};

[[noreturn]] void bad_value(std::string_view what) { throw std::invalid_argument(std::string(what)); }

double real_value(std::string_view v) {
  double x;
  if (!to_double(trim(v), x)) bad_value("expected a number, got '" + std::string(v) + "'");
  return x;
}

std::size_t count_value(std::string_view v) {
  v = trim(v);
  std::size_t n = 0;
  auto [end, ec] = std::from_chars(v.data(), v.data() + v.size(), n);
  if (v.empty() || ec != std::errc{} || end != v.data() + v.size())
    bad_value("expected a non-negative integer, got '" + std::string(v) + "'");
  return n;
}

const std::vector<Setter>& setters() {
  static const std::vector<Setter> table = {
      {"preset", [](RunConfig& c, std::string_view v) { c.preset = std::string(trim(v)); }},
      {"flavor",
       [](RunConfig& c, std::string_view v) {
         v = trim(v);
         if (v == "2d" || v == "2D") c.flavor = WalkFlavor::TwoD;
         else if (v == "3d" || v == "3D") c.flavor = WalkFlavor::ThreeD;
         else bad_value("expected 2d or 3d, got '" + std::string(v) + "'");
       }},
      {"sizes",
       [](RunConfig& c, std::string_view v) {
         c.sizes.clear();
         for (auto t : tokens(v)) c.sizes.push_back(count_value(t));
       }},
      {"epsilon", [](RunConfig& c, std::string_view v) { c.epsilon = real_value(v); }},
      {"steps", [](RunConfig& c, std::string_view v) { c.steps = count_value(v); }},
      {"mass", [](RunConfig& c, std::string_view v) { c.mass = real_value(v); }},
      {"lambda", [](RunConfig& c, std::string_view v) { c.lambda = real_value(v); }},
      {"coupling", [](RunConfig& c, std::string_view v) { c.coupling = real_value(v); }},
      {"center",
       [](RunConfig& c, std::string_view v) {
         c.center.clear();
         for (auto t : tokens(v)) c.center.push_back(real_value(t));
       }},
      {"width", [](RunConfig& c, std::string_view v) { c.width = real_value(v); }},
      {"polarization",
       [](RunConfig& c, std::string_view v) {
         c.polarization.clear();
         for (auto t : tokens(v)) c.polarization.push_back(parse_complex(t));
       }},
      {"cadence", [](RunConfig& c, std::string_view v) { c.cadence = count_value(v); }},
      {"snapshot_every", [](RunConfig& c, std::string_view v) { c.snapshot_every = count_value(v); }},
      {"out_dir", [](RunConfig& c, std::string_view v) { c.out_dir = std::string(trim(v)); }},
      {"angle_mode",
       [](RunConfig& c, std::string_view v) {
         v = trim(v);
         if (v == "physical") c.angle_mode = AngleMode::Physical;
         else if (v == "index") c.angle_mode = AngleMode::Index;
         else bad_value("expected physical or index, got '" + std::string(v) + "'");
       }},
      {"wrap_warning",
       [](RunConfig& c, std::string_view v) {
         v = trim(v);
         if (v == "true") c.wrap_warning = true;
         else if (v == "false") c.wrap_warning = false;
         else bad_value("expected true or false, got '" + std::string(v) + "'");
       }},
  };
  return table;
}

const Setter* find_setter(std::string_view key) {
  for (const auto& s : setters())
    if (s.key == key) return &s;
  return nullptr;
}

std::vector<double> midpoint(const std::vector<std::size_t>& sizes) {
  std::vector<double> c;
  for (auto n : sizes) c.push_back(static_cast<double>(n / 2));
  return c;
}

}  // namespace

ConfigError::ConfigError(std::string key, std::size_t line, const std::string& what)
    : std::runtime_error(describe(key, line, what)), key_(std::move(key)), line_(line) {}

LatticeGeometry RunConfig::geometry() const { return LatticeGeometry(sizes, epsilon); }

GaussianPacketSpec RunConfig::packet() const {
  const auto geom = geometry();
  GaussianPacketSpec spec;
  for (int a = 0; a < dims(); ++a)
    spec.center.push_back((center[a] - static_cast<double>(geom.origin(axis_from_index(a)))) * epsilon);
  spec.width = width;
  spec.polarization = polarization;
  return spec;
}

StepPlan RunConfig::plan() const {
  return flavor == WalkFlavor::TwoD ? StepPlan::walk_2d(params(), geometry(), angle_mode)
                                    : StepPlan::walk_3d(params(), geometry(), angle_mode);
}

RunConfig defaults_for(WalkFlavor flavor) {
  RunConfig c;
  c.flavor = flavor;
  if (flavor == WalkFlavor::ThreeD) {
    c.sizes = {64, 64, 64};
    c.polarization = {0.0, 1.0, 0.0, 1.0};
  }
  c.center = midpoint(c.sizes);
  return c;
}

std::string format_complex(std::complex<double> z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string im = format_double(z.imag()) + "i";
  if (z.real() == 0.0) return im;
  return format_double(z.real()) + (z.imag() < 0.0 ? "" : "+") + im;
}

std::complex<double> parse_complex(std::string_view token) {
  const std::string text(token);
  auto fail = [&]() -> std::complex<double> { bad_value("expected a complex number, got '" + text + "'"); };
  if (token.empty()) return fail();
  if (token.back() != 'i') {
    double re;
    if (!to_double(token, re)) return fail();
    return {re, 0.0};
  }
  token.remove_suffix(1);
  // Split at the last sign that is not the leading one or part of an exponent.
  std::size_t split = std::string_view::npos;
  for (std::size_t k = token.size(); k-- > 1;) {
    if ((token[k] == '+' || token[k] == '-') && token[k - 1] != 'e' && token[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag_part = [&](std::string_view s, double& out) {
    if (s.empty() || s == "+") return out = 1.0, true;
    if (s == "-") return out = -1.0, true;
    return to_double(s, out);
  };
  double re = 0.0, im = 0.0;
  if (split == std::string_view::npos) {
    if (!imag_part(token, im)) return fail();
  } else if (!to_double(token.substr(0, split), re) || !imag_part(token.substr(split), im)) {
    return fail();
  }
  return {re, im};
}

bool is_config_key(std::string_view key) { return find_setter(key) != nullptr; }

void set_config_value(RunConfig& config, std::string_view key, std::string_view value, std::size_t line) {
  const Setter* setter = find_setter(key);
  if (!setter) throw ConfigError(std::string(key), line, "unknown key");
  try {
    setter->apply(config, value);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string(key), line, e.what());
  }
}

std::vector<ConfigEntry> read_entries(std::string_view text) {
  std::vector<ConfigEntry> entries;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigError("", line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigError("", line_no, "missing key before '='");
    if (!is_config_key(key)) throw ConfigError(key, line_no, "unknown key");
    if (value.empty()) throw ConfigError(key, line_no, "missing value");
    for (const auto& e : entries)
      if (e.key == key) throw ConfigError(key, line_no, "repeated key (first on line " + std::to_string(e.line) + ")");
    entries.push_back({key, value, line_no});
  }
  return entries;
}

RunConfig resolve(const std::vector<ConfigEntry>& entries, const std::vector<ConfigEntry>& overrides) {
  std::map<std::string, ConfigEntry> merged;
  for (const auto& e : entries) merged[e.key] = e;
  for (const auto& e : overrides) {
    if (!is_config_key(e.key)) throw ConfigError(e.key, e.line, "unknown key");
    merged[e.key] = e;
  }

  RunConfig config;
  if (auto it = merged.find("preset"); it != merged.end()) {
    try {
      config = preset_config(trim(it->second.value));
    } catch (const ConfigError& e) {
      throw ConfigError("preset", it->second.line, e.what());
    }
  } else if (auto fl = merged.find("flavor"); fl != merged.end()) {
    set_config_value(config, "flavor", fl->second.value, fl->second.line);
    config = defaults_for(config.flavor);
  } else {
    throw ConfigError("flavor", 0, "missing required key (or give a preset)");
  }

  for (const auto& [key, e] : merged) set_config_value(config, key, e.value, e.line);
  if (!merged.contains("center")) config.center = midpoint(config.sizes);

  try {
    validate(config);
  } catch (const ConfigError& e) {
    const auto it = merged.find(e.key());
    if (it == merged.end() || it->second.line == 0) throw;
    throw ConfigError(e.key(), it->second.line, std::string(e.what()).substr(e.key().size() + 2));
  }
  return config;
}

RunConfig parse_config(std::string_view text) { return resolve(read_entries(text)); }

void validate(const RunConfig& c) {
  auto fail = [](const char* key, const std::string& what) { throw ConfigError(key, 0, what); };
  const auto dims = static_cast<std::size_t>(c.dims());
  if (c.sizes.size() != dims) fail("sizes", "expected " + std::to_string(dims) + " values for this flavor");
  for (auto n : c.sizes)
    if (n < 2) fail("sizes", "every size must be at least 2");
  try {
    c.params().validate();
  } catch (const std::invalid_argument& e) {
    const std::string what = e.what();
    fail(what.substr(0, what.find(' ')).c_str(), what);
  }
  if (!(c.width > 0.0)) fail("width", "width must be positive");
  if (c.center.size() != dims) fail("center", "expected " + std::to_string(dims) + " values for this flavor");
  for (std::size_t a = 0; a < dims; ++a)
    if (c.center[a] < 0.0 || c.center[a] > static_cast<double>(c.sizes[a] - 1))
      fail("center", "center lies outside the lattice");
  if (c.polarization.size() != static_cast<std::size_t>(c.spin_dim()))
    fail("polarization", "expected " + std::to_string(c.spin_dim()) + " components for this flavor");
  if (std::all_of(c.polarization.begin(), c.polarization.end(), [](auto z) { return std::abs(z) == 0.0; }))
    fail("polarization", "polarization must be non-zero");
  if (c.cadence < 1) fail("cadence", "cadence must be at least 1");
  if (c.out_dir.empty()) fail("out_dir", "out_dir must not be empty");
  if (c.preset) preset_config(*c.preset);
}

std::string to_text(const RunConfig& c) {
  std::ostringstream out;
  auto join = [](const auto& values, auto fmt) {
    std::string s;
    for (const auto& v : values) s += (s.empty() ? "" : " ") + fmt(v);
    return s;
  };
  if (c.preset) out << "preset = " << *c.preset << '\n';
  out << "flavor = " << (c.flavor == WalkFlavor::TwoD ? "2d" : "3d") << '\n'
      << "sizes = " << join(c.sizes, [](std::size_t n) { return std::to_string(n); }) << '\n'
      << "epsilon = " << format_double(c.epsilon) << '\n'
      << "steps = " << c.steps << '\n'
      << "mass = " << format_double(c.mass) << '\n'
      << "lambda = " << format_double(c.lambda) << '\n'
      << "coupling = " << format_double(c.coupling) << '\n'
      << "center = " << join(c.center, format_double) << '\n'
      << "width = " << format_double(c.width) << '\n'
      << "polarization = " << join(c.polarization, format_complex) << '\n'
      << "cadence = " << c.cadence << '\n'
      << "snapshot_every = " << c.snapshot_every << '\n'
      << "out_dir = " << c.out_dir << '\n'
      << "angle_mode = " << (c.angle_mode == AngleMode::Physical ? "physical" : "index") << '\n'
      << "wrap_warning = " << (c.wrap_warning ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace branewalk::experiment
