// Microbenchmarks for the dense eigensolver wrappers and the smallest
// singular value estimator; these dominate spectrum and resolvent runtimes.

#include <benchmark/benchmark.h>

#include <Eigen/Core>
#include <complex>
#include <random>

#include "eulerspec/eig.hpp"

using namespace eulerspec;

namespace {

Eigen::MatrixXcd random_matrix(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, 1.0);
  Eigen::MatrixXcd a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
  return a;
}

void BM_EigValues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXcd a = random_matrix(n, 0xbe7c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_values(a));
  }
}
BENCHMARK(BM_EigValues)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EigValuesWithVectors(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXcd a = random_matrix(n, 0xbe7c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_dense(a, true));
  }
}
BENCHMARK(BM_EigValuesWithVectors)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

void BM_EigHermitianValues(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Eigen::MatrixXcd a = random_matrix(n, 0xbe7c);
  a = (a + a.adjoint()).eval();
  for (auto _ : state) {
    benchmark::DoNotOptimize(eig_hermitian_values(a));
  }
}
BENCHMARK(BM_EigHermitianValues)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

void BM_SmallestSingularValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const Eigen::MatrixXcd a = random_matrix(n, 0xbe7c);
  for (auto _ : state) {
    benchmark::DoNotOptimize(smallest_singular_value(a));
  }
}
BENCHMARK(BM_SmallestSingularValue)->Arg(64)->Arg(256)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
