// Microbenchmarks for the lattice-geometry layer: slice representatives,
// inner-point counting, and slice enumeration.

#include <benchmark/benchmark.h>

#include "eulerspec/lattice.hpp"

using namespace eulerspec;

namespace {

void BM_SliceRepresentative(benchmark::State& state) {
  const LatticeVector p{2, 1};
  for (auto _ : state) {
    for (std::int64_t x = -10; x <= 10; ++x) {
      for (std::int64_t y = -10; y <= 10; ++y) {
        if (x == 0 && y == 0) continue;
        benchmark::DoNotOptimize(slice_representative({x, y}, p));
      }
    }
  }
  state.SetItemsProcessed(state.iterations() * 440);
}
BENCHMARK(BM_SliceRepresentative);

void BM_Kappa(benchmark::State& state) {
  const auto n = state.range(0);
  const LatticeVector p{n, n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(kappa(p));
  }
}
BENCHMARK(BM_Kappa)->Arg(1)->Arg(2)->Arg(4)->Arg(8);

void BM_ContributingSlices(benchmark::State& state) {
  const auto n = state.range(0);
  const LatticeVector p{n, n};
  for (auto _ : state) {
    benchmark::DoNotOptimize(contributing_slices(p));
  }
}
BENCHMARK(BM_ContributingSlices)->Arg(1)->Arg(2)->Arg(4);

void BM_EnumerateRepresentatives(benchmark::State& state) {
  const LatticeVector p{2, 1};
  const double radius = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(enumerate_representatives(p, radius));
  }
}
BENCHMARK(BM_EnumerateRepresentatives)->Arg(4)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
