#include <benchmark/benchmark.h>

#include <cmath>

#include "kfuzzy/geometry/laplace.hpp"
#include "kfuzzy/group/convolution.hpp"

using namespace kfuzzy::group;

namespace {

void BM_MultiplySplit(benchmark::State& state) {
  const SplitElement a(0.3, {0.1, -0.2, 0.4}), b(-0.7, {1.1, 0.5, -0.3});
  for (auto _ : state) benchmark::DoNotOptimize(multiply_split(a, b));
}
BENCHMARK(BM_MultiplySplit);

void BM_Convolve(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<GridAxis> axes{{-4.0, 4.0, n}, {-4.0, 4.0, n}};
  const auto f = GridFunction::sample(axes, [](const SplitElement& g) {
    return Complex(std::exp(-2.0 * g.t() * g.t() - 2.0 * g.y(0) * g.y(0)), 0.0);
  });
  for (auto _ : state) benchmark::DoNotOptimize(convolve(f, f));
}
BENCHMARK(BM_Convolve)->Arg(33)->Arg(65)->Unit(benchmark::kMillisecond);

void BM_ClassicalModeLaplace(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const std::vector<GridAxis> axes{{-1.0, 1.0, n}, {-1.0, 1.0, n}};
  kfuzzy::geometry::ClassicalMode m;
  m.mu2 = 0.16;
  for (auto _ : state) {
    const auto f = kfuzzy::geometry::classical_mode_grid(m, axes);
    benchmark::DoNotOptimize(kfuzzy::geometry::laplace_apply(f, m.mu2).relative());
  }
}
BENCHMARK(BM_ClassicalModeLaplace)->Arg(128)->Arg(512)->Unit(benchmark::kMillisecond);

}  // namespace
