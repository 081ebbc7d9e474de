#include "branewalk/walk_engine.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <type_traits>
#include <utility>

#include "branewalk/shifts.hpp"

namespace branewalk {

namespace {

inline void apply2(const Coin2x2& u, Amplitude& a, Amplitude& b) {
  const Amplitude na = u(0, 0) * a + u(0, 1) * b;
  const Amplitude nb = u(1, 0) * a + u(1, 1) * b;
  a = na;
  b = nb;
}

template <typename CoinFor>
void apply_site_coins(SpinorField& field, Axis slice_axis, CoinFor&& coin_for_slice, bool block_mixing) {
  const auto& g = field.geometry();
  const std::size_t stride = g.stride(slice_axis);
  const std::size_t len = g.size(slice_axis);
  const int sd = field.spin_dim();
  Amplitude* amp = field.amplitudes().data();
  const auto n = static_cast<std::ptrdiff_t>(g.num_sites());
#if defined(BRANEWALK_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    const auto site = static_cast<std::size_t>(s);
    const Coin2x2& u = coin_for_slice((site / stride) % len);
    Amplitude* a = amp + site * sd;
    if (sd == 2) {
      apply2(u, a[0], a[1]);
    } else if (block_mixing) {
      apply2(u, a[0], a[2]);
      apply2(u, a[1], a[3]);
    } else {
      apply2(u, a[0], a[1]);
      apply2(u, a[2], a[3]);
    }
  }
}

void apply_uniform_rotation(SpinorField& field, const Coin2x2& r) {
  Amplitude* amp = field.amplitudes().data();
  const auto n = static_cast<std::ptrdiff_t>(field.num_sites());
#if defined(BRANEWALK_HAVE_OPENMP)
#pragma omp parallel for schedule(static)
#endif
  for (std::ptrdiff_t s = 0; s < n; ++s) {
    Amplitude* a = amp + s * 4;
    apply2(r, a[0], a[1]);
    apply2(r, a[2], a[3]);
  }
}

}  // namespace

void step_in_place(SpinorField& field, const StepPlan& plan, SpinorField& scratch) {
  plan.check_compatible(field.geometry(), field.spin_dim());
  if (!field.compatible_with(scratch)) throw std::invalid_argument("scratch buffer does not match the field");
  const auto offsets = shift_offsets(field.spin_dim(), ShiftDirection::Forward);
  const Axis wall = plan.confining_axis();

  for (const auto& op : plan.ops()) {
    std::visit(
        [&](const auto& o) {
          using T = std::decay_t<decltype(o)>;
          if constexpr (std::is_same_v<T, CoinQOp>) {
            apply_site_coins(
                field, wall, [&](std::size_t k) -> const Coin2x2& { return plan.coin_q_at(o.sign, k); }, false);
          } else if constexpr (std::is_same_v<T, ShiftOp>) {
            gather_shift(field, scratch, o.axis, offsets);
            std::swap(field, scratch);
          } else if constexpr (std::is_same_v<T, RotationOp>) {
            apply_uniform_rotation(field, o.rotation);
          } else if constexpr (std::is_same_v<T, MassCouplingOp>) {
            apply_site_coins(
                field, wall, [&](std::size_t k) -> const Coin2x2& { return plan.mass_factor_at(k); }, true);
          }
        },
        op);
  }
}

SpinorField step(const SpinorField& field, const StepPlan& plan) {
  SpinorField out = field;
  SpinorField scratch(field.geometry(), field.spin_dim());
  step_in_place(out, plan, scratch);
  return out;
}

EvolveResult evolve(SpinorField field, const StepPlan& plan, std::size_t steps, const EvolveOptions& options) {
  if (options.cadence == 0) throw std::invalid_argument("observer cadence must be at least 1");
  for (const auto& obs : options.observers)
    if (obs.every == 0) throw std::invalid_argument("observer interval must be at least 1");
  plan.check_compatible(field.geometry(), field.spin_dim());

  EvolveResult result{field, ObservableSeries(field.geometry().dims()), {}, 0.0, std::nullopt};
  const double initial_norm = total_norm(field);
  SpinorField scratch(field.geometry(), field.spin_dim());

  for (const auto& obs : options.observers) obs.notify(0, field);

  for (std::size_t j = 1; j <= steps; ++j) {
    step_in_place(field, plan, scratch);
    const bool last = j == steps;
    for (const auto& obs : options.observers)
      if (last || j % obs.every == 0) obs.notify(j, field);
    if (j % options.cadence != 0 && !last) continue;

    const auto density = probability_density(field);
    auto rec = measure(density, j);
    result.max_norm_drift = std::max(result.max_norm_drift, std::abs(rec.norm - initial_norm));
    if (options.check_wrap) {
      rec.boundary_mass = boundary_shell_mass(density, options.shell_width);
      if (rec.boundary_mass > options.shell_threshold && !result.first_wrap_step) {
        result.first_wrap_step = j;
        char msg[160];
        std::snprintf(msg, sizeof msg,
                      "boundary-shell mass %.3e exceeded %.3e at step %zu; probability has reached the periodic wrap",
                      rec.boundary_mass, options.shell_threshold, j);
        result.warnings.emplace_back(msg);
      }
    }
    result.series.append(rec);
  }
  result.field = std::move(field);
  return result;
}

}  // namespace branewalk
