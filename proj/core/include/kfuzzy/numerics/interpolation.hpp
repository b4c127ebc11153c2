#pragma once

#include <array>
#include <cstddef>
#include <optional>

namespace kfuzzy::numerics {

// Four-point Lagrange stencil on a uniform grid x_j = lo + j h, j = 0..n−1.
struct CubicStencil {
  std::size_t start = 0;          // first of the four sample indices
  std::array<double, 4> weights{};
};

// Stencil for evaluating at x, shifted inward near the ends. Empty when x lies outside [lo, lo + (n−1)h]
// by more than `slack` grid steps, or when n < 4.
std::optional<CubicStencil> cubic_stencil(double x, double lo, double h, std::size_t n, double slack = 1e-9);

}  // namespace kfuzzy::numerics
