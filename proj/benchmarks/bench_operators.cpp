// Microbenchmarks for operator assembly: tridiagonal slice operators and the
// sparse two-dimensional box truncation with its matrix-free apply.

#include <benchmark/benchmark.h>

#include <vector>

#include "eulerspec/coefficients.hpp"
#include "eulerspec/operators.hpp"

using namespace eulerspec;

namespace {

const ProblemInstance kInst{{2, 1}, Complex(1.5, -0.75), {}};

void BM_SliceCoefficients(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SliceDescriptor slice{{1, 0}, kInst.p, std::nullopt};
  for (auto _ : state) {
    benchmark::DoNotOptimize(slice_coefficients(kInst, slice, {-n, n}));
  }
}
BENCHMARK(BM_SliceCoefficients)->Arg(128)->Arg(512);

void BM_BuildLq(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SliceDescriptor slice{{1, 0}, kInst.p, std::nullopt};
  const auto coeffs = slice_coefficients(kInst, slice, {-n, n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_Lq(coeffs, {-n, n}));
  }
}
BENCHMARK(BM_BuildLq)->Arg(128)->Arg(512);

void BM_TridiagonalToDense(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const SliceDescriptor slice{{1, 0}, kInst.p, std::nullopt};
  const auto coeffs = slice_coefficients(kInst, slice, {-n, n});
  const auto op = build_Lq(coeffs, {-n, n});
  for (auto _ : state) {
    benchmark::DoNotOptimize(op.to_dense());
  }
}
BENCHMARK(BM_TridiagonalToDense)->Arg(128)->Arg(512);

void BM_BoxBuild(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_L2D(kInst, K));
  }
}
BENCHMARK(BM_BoxBuild)->Arg(8)->Arg(16)->Arg(32);

void BM_BoxApply(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const auto box = build_L2D(kInst, K);
  std::vector<Complex> x(static_cast<std::size_t>(box.dim()), Complex(1.0, -0.5));
  std::vector<Complex> y(x.size());
  for (auto _ : state) {
    box.apply(x.data(), y.data());
    benchmark::DoNotOptimize(y.data());
    benchmark::ClobberMemory();
  }
  state.SetItemsProcessed(state.iterations() * box.dim());
}
BENCHMARK(BM_BoxApply)->Arg(8)->Arg(16)->Arg(32);

void BM_BoxNormUpperBound(benchmark::State& state) {
  const int K = static_cast<int>(state.range(0));
  const auto box = build_L2D(kInst, K);
  for (auto _ : state) {
    benchmark::DoNotOptimize(box.norm_upper_bound());
  }
}
BENCHMARK(BM_BoxNormUpperBound)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
