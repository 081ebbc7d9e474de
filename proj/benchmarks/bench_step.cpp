#include <benchmark/benchmark.h>

#include "branewalk/lattice.hpp"
#include "branewalk/observables.hpp"
#include "branewalk/walk_engine.hpp"

using namespace branewalk;

namespace {

void BM_Step2D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LatticeGeometry g({n, n}, 0.02);
  auto plan = StepPlan::walk_2d({1.0, 60.0, 70.0, 0.02}, g);
  auto f = make_gaussian_packet(g, {{0.0, 0.0}, 0.1, {0.0, 1.0}});
  SpinorField scratch(g, 2);
  for (auto _ : state) {
    step_in_place(f, plan, scratch);
    benchmark::DoNotOptimize(f.at(0, 0));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_sites()));
}
BENCHMARK(BM_Step2D)->Arg(128)->Arg(256)->Unit(benchmark::kMicrosecond);

void BM_Step3D(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  LatticeGeometry g({n, n, n}, 0.04);
  auto plan = StepPlan::walk_3d({11.0, 90.0, 4.0, 0.04}, g);
  auto f = make_gaussian_packet(g, {{0.0, 0.0, 0.0}, 0.1, {0.0, 1.0, 0.0, 1.0}});
  SpinorField scratch(g, 4);
  for (auto _ : state) {
    step_in_place(f, plan, scratch);
    benchmark::DoNotOptimize(f.at(0, 0));
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(g.num_sites()));
}
BENCHMARK(BM_Step3D)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);

void BM_Measure3D(benchmark::State& state) {
  LatticeGeometry g({64, 64, 64}, 0.04);
  auto f = make_gaussian_packet(g, {{0.0, 0.0, 0.0}, 0.1, {0.0, 1.0, 0.0, 1.0}});
  for (auto _ : state) benchmark::DoNotOptimize(measure(probability_density(f), 0));
}
BENCHMARK(BM_Measure3D)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
