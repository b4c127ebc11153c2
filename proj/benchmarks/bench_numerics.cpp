#include <benchmark/benchmark.h>

#include <random>

#include "kfuzzy/numerics/linalg.hpp"

using namespace kfuzzy::numerics;

namespace {

CMatrix random_matrix(std::size_t n, double scale) {
  std::mt19937_64 rng(n);
  std::normal_distribution<double> d(0.0, scale);
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = Complex(d(rng), d(rng));
  return m;
}

void BM_Expm(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix m = random_matrix(n, 1.0 / static_cast<double>(n));
  for (auto _ : state) benchmark::DoNotOptimize(expm(m));
}
BENCHMARK(BM_Expm)->Arg(16)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EigHermitian(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix a = random_matrix(n, 1.0);
  const CMatrix h = a + a.adjoint();
  for (auto _ : state) benchmark::DoNotOptimize(eig_hermitian(h));
}
BENCHMARK(BM_EigHermitian)->Arg(64)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_EigGeneral(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix m = random_matrix(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(eig_general(m));
}
BENCHMARK(BM_EigGeneral)->Arg(64)->Arg(128)->Arg(256)->Unit(benchmark::kMillisecond);

void BM_Svd(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const CMatrix m = random_matrix(n, 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(svd(m));
}
BENCHMARK(BM_Svd)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
