#pragma once

#include <span>
#include <vector>

#include "kfuzzy/numerics/matrix.hpp"

namespace kfuzzy::numerics {

// Finite-difference weights for the derivative of the given order at x0 from samples at `points`
// (Fornberg's recursion).
std::vector<double> fd_weights(double x0, std::span<const double> points, int order);

// Derivative of uniformly spaced samples. order ∈ {1, 2}, accuracy ∈ {2, 4}. Interior points use
// central stencils; points near the ends use one-sided stencils of the same accuracy.
std::vector<Complex> fin_diff(std::span<const Complex> f, int order, int accuracy, double h);
std::vector<double> fin_diff(std::span<const double> f, int order, int accuracy, double h);

// Same derivative applied along one axis of a row-major array with the given shape.
std::vector<Complex> fin_diff_axis(std::span<const Complex> f, std::span<const std::size_t> shape, std::size_t axis,
                                   int order, int accuracy, double h);

}  // namespace kfuzzy::numerics
