#pragma once

#include <vector>

#include "kfuzzy/group/grid_function.hpp"
#include "kfuzzy/special/bessel.hpp"

namespace kfuzzy::geometry {

using group::Complex;
using group::GridAxis;
using group::GridFunction;
using group::SplitElement;

// Factor multiplying δ^{ij}∂_i∂_j. The inverse of dt² − e^{2t}|dy|² gives e^{−2t}; the other
// choice is available to measure how far a mode is from solving it.
enum class SpatialFactor { ExpMinus2t, ExpPlus2t };

struct LaplaceOptions {
  SpatialFactor spatial = SpatialFactor::ExpMinus2t;
  int accuracy = 4;  // 2 or 4
};

struct LaplaceResult {
  GridFunction residual;
  // |f_tt| + (D−1)|f_t| + |μ² f| + factor·|Δf| at every sample; the natural size of the residual.
  GridFunction scale;

  // max |residual| / max scale over samples at least `margin` points away from every edge.
  double relative(std::size_t margin = 2) const;
  double max_abs(std::size_t margin = 2) const;
};

// (∂_t² + (D−1)∂_t + μ² − factor(t)·δ^{ij}∂_i∂_j) f with finite differences of the given accuracy.
// Throws DimensionError when an axis has too few samples for the stencil.
LaplaceResult laplace_apply(const GridFunction& f, Complex mu2, const LaplaceOptions& opts = {});

// e^{iλ·y} e^{(1−D)t/2} H^{(kind)}_ν(|λ| e^{−t}),  ν = √(((D−1)/2)² − μ²) on the principal branch.
struct ClassicalMode {
  int dim = 2;
  Complex mu2 = 0.0;
  std::vector<double> lambda{1.0};
  int kind = 1;

  Complex nu() const;
  double lambda_norm() const;
  // μ² giving order ν in dimension D.
  static Complex mu2_for_order(int dim, Complex nu);
};

// Throws DegenerateModeError for λ = 0 and DimensionError when λ does not have D−1 entries.
Complex classical_mode(const ClassicalMode& m, const SplitElement& p, const special::HankelOptions& opts = {});

// The mode sampled on a grid. The Hankel factor depends on t only and is evaluated once per t row.
GridFunction classical_mode_grid(const ClassicalMode& m, const std::vector<GridAxis>& axes,
                                 const special::HankelOptions& opts = {});

}  // namespace kfuzzy::geometry
