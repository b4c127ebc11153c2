#pragma once

#include "kfuzzy/group/grid_function.hpp"
#include "kfuzzy/tolerances.hpp"

namespace kfuzzy::group {

struct ConvolutionOptions {
  bool allow_higher_dim = false;  // D > 2 uses generic tensor interpolation and is slow
};

struct ConvolutionResult {
  GridFunction value;
  bool truncation_warning = false;
  double edge_ratio = 0.0;  // boundary magnitude relative to the peak, worst of the two inputs
};

// (f1 ⋆ f2)(g) = ∫ dμ_L(g′) f1(g′) f2(g′⁻¹g) on the common grid of f1 and f2.
ConvolutionResult convolve(const GridFunction& f1, const GridFunction& f2, const ConvolutionOptions& opts = {},
                           const Tolerances& tol = default_tolerances());

// f*(g) = conj(f(g⁻¹))·Δ(g⁻¹); samples whose preimage leaves the grid are set to zero.
GridFunction involution(const GridFunction& f);

}  // namespace kfuzzy::group
