// Microbenchmarks for the time stepper: RK4 integration cost per box size and
// the growth-rate fit on a finished trajectory.

#include <benchmark/benchmark.h>

#include "eulerspec/evolution.hpp"

using namespace eulerspec;

namespace {

const ProblemInstance kInst{{0, 2}, Complex(2.0, 0.0), {}};

void BM_Evolve(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const StateVector omega0 = random_state(K, 42);
  const double dt = 0.9 * max_stable_dt(kInst, K);
  for (auto _ : state) {
    benchmark::DoNotOptimize(evolve(kInst, K, omega0, 1.0, dt));
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<std::int64_t>(1.0 / dt + 1.0));
}
BENCHMARK(BM_Evolve)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_RandomState(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(random_state(K, 42));
  }
}
BENCHMARK(BM_RandomState)->Arg(16)->Arg(32);

void BM_GrowthRate(benchmark::State& state) {
  const int K = 8;
  const StateVector omega0 = random_state(K, 42);
  const double dt = 0.9 * max_stable_dt(kInst, K);
  const Trajectory traj = evolve(kInst, K, omega0, 10.0, dt);
  for (auto _ : state) {
    benchmark::DoNotOptimize(growth_rate(traj));
  }
}
BENCHMARK(BM_GrowthRate);

}  // namespace

BENCHMARK_MAIN();
