#include <benchmark/benchmark.h>

#include "kfuzzy/special/bessel.hpp"

using namespace kfuzzy::special;

namespace {

void BM_BesselJ(benchmark::State& state) {
  const BesselOrder nu(std::complex<double>(0.3, 0.4));
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bessel_j(nu, x));
}
BENCHMARK(BM_BesselJ)->Arg(1)->Arg(10)->Arg(40);

void BM_HankelBoth(benchmark::State& state) {
  const BesselOrder nu(std::complex<double>(0.0, 0.4));
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(hankel_both(nu, x));
}
BENCHMARK(BM_HankelBoth)->Arg(1)->Arg(10)->Arg(40);

void BM_HankelIntegerLimit(benchmark::State& state) {
  const BesselOrder nu(1.0);
  for (auto _ : state) benchmark::DoNotOptimize(hankel(1, nu, 3.0));
}
BENCHMARK(BM_HankelIntegerLimit);

}  // namespace
