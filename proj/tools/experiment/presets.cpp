#include "experiment/presets.hpp"

#include <complex>

namespace branewalk::experiment {
namespace {

struct Preset {
  std::string_view name;
  std::string_view help;
  RunConfig (*make)();
};

RunConfig fig1() {
  RunConfig c = defaults_for(WalkFlavor::TwoD);
  c.sizes = {128, 128};
  c.center = {64, 64};
  c.epsilon = 0.04;
  c.lambda = 60;
  c.coupling = 70;
  c.mass = 1;
  c.steps = 250;  // t = 10 read as physical time j * epsilon
  c.snapshot_every = 50;
  c.polarization = {1.0 / std::numbers::sqrt2, 1.0 / std::numbers::sqrt2};
  c.out_dir = "fig1";
  return c;
}

RunConfig fig2() {
  RunConfig c = defaults_for(WalkFlavor::TwoD);
  c.sizes = {256, 256};
  c.center = {128, 128};
  c.epsilon = 0.02;
  c.lambda = 60;
  c.coupling = 70;
  c.mass = 1;
  c.steps = 90;
  c.snapshot_every = 30;
  c.polarization = {0.0, 1.0};
  c.out_dir = "fig2";
  return c;
}

RunConfig fig3() {
  RunConfig c = defaults_for(WalkFlavor::ThreeD);
  c.epsilon = 0.04;
  c.lambda = 90;
  c.coupling = 4;
  c.mass = 0;
  c.steps = 12;
  c.snapshot_every = 12;
  const std::complex<double> i{0.0, 1.0};
  c.polarization = {0.5, 0.5 * i, 0.5, 0.5 * i};
  c.out_dir = "fig3";
  return c;
}

RunConfig fig4() {
  RunConfig c = defaults_for(WalkFlavor::ThreeD);
  c.epsilon = 0.04;
  c.lambda = 90;
  c.coupling = 4;
  c.mass = 11;
  c.steps = 20;
  c.snapshot_every = 10;
  c.polarization = {0.0, 1.0 / std::numbers::sqrt2, 0.0, 1.0 / std::numbers::sqrt2};
  c.out_dir = "fig4";
  return c;
}

constexpr Preset kPresets[] = {
    {"fig1",
     "2D walk, 128x128, eps=0.04, lambda=60, h=70, m=1, packet at (64,64) with polarization (1,1)/sqrt2, "
     "width 0.1. The figure's \"t=10\" is read as physical time t = j*eps, i.e. 250 steps; pass --steps 10 "
     "for the other reading. At 250 steps the x-front wraps the periodic box and meta.json records a warning.",
     fig1},
    {"fig2",
     "2D walk, 256x256, eps=0.02, lambda=60, h=70, m=1, packet at (128,128) with polarization (0,1), 90 steps. "
     "Compare with --mass 0 for the free case.",
     fig2},
    {"fig3", "3D walk, 64^3, eps=0.04, m=0, polarization (1,i,1,i)/2 at the center, 12 steps.", fig3},
    {"fig4", "3D walk, 64^3, eps=0.04, lambda=90, h=4, m=11, polarization (0,1,0,1)/sqrt2 at the center, 20 steps.",
     fig4},
};

}  // namespace

RunConfig preset_config(std::string_view name) {
  for (const auto& p : kPresets) {
    if (p.name == name) {
      RunConfig c = p.make();
      c.preset = std::string(name);
      return c;
    }
  }
  throw ConfigError("preset", 0, "unknown preset '" + std::string(name) + "' (fig1, fig2, fig3, fig4)");
}

std::vector<std::string> preset_names() {
  std::vector<std::string> names;
  for (const auto& p : kPresets) names.emplace_back(p.name);
  return names;
}

std::string_view preset_help(std::string_view name) {
  for (const auto& p : kPresets)
    if (p.name == name) return p.help;
  return {};
}

}  // namespace branewalk::experiment
