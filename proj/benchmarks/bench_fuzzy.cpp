#include <benchmark/benchmark.h>

#include "kfuzzy/fuzzy/coherent.hpp"
#include "kfuzzy/fuzzy/laplacian.hpp"
#include "kfuzzy/representation/oscillator.hpp"

using namespace kfuzzy;
using namespace kfuzzy::fuzzy;
using namespace kfuzzy::representation;

namespace {

void BM_FuzzyLaplacianAssembly(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ops = jordan_schwinger(OscillatorTruncation(n), {1.0});
  for (auto _ : state) benchmark::DoNotOptimize(fuzzy_laplacian(ops));
}
BENCHMARK(BM_FuzzyLaplacianAssembly)->Arg(8)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_FuzzySpectrum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ops = jordan_schwinger(OscillatorTruncation(n), {1.0});
  for (auto _ : state) benchmark::DoNotOptimize(solve_fuzzy_spectrum(ops));
}
BENCHMARK(BM_FuzzySpectrum)->Arg(8)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_Dequantize(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto ops = jordan_schwinger(OscillatorTruncation(n), {1.0});
  const auto fam = CoherentFamily::from_operators(ops, oscillator_ground_state(n), {{-0.5, 0.5, 21}, {-1.0, 1.0, 21}});
  const CMatrix f = ops.x0 * ops.xk[0];
  for (auto _ : state) benchmark::DoNotOptimize(dequantize(f, fam));
}
BENCHMARK(BM_Dequantize)->Arg(16)->Arg(32)->Unit(benchmark::kMillisecond);

void BM_GridCoherentState(benchmark::State& state) {
  const GridRealization grid(VariableKind::QLine, 8.0, static_cast<std::size_t>(state.range(0)));
  const auto fam = CoherentFamily::from_grid(grid, gaussian_state(grid), {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}});
  const group::SplitElement g(0.3, {0.4});
  for (auto _ : state) benchmark::DoNotOptimize(coherent_state(fam, g));
}
BENCHMARK(BM_GridCoherentState)->Arg(256)->Arg(1024);

}  // namespace
