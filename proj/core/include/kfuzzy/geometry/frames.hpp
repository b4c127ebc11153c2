#pragma once

#include <functional>

#include "kfuzzy/geometry/real_matrix.hpp"
#include "kfuzzy/group/elements.hpp"

namespace kfuzzy::geometry {

using group::SplitElement;

enum class FrameSide { Right, Left };

// Invariant coframe and frame at a point, in split coordinates (t, y¹, …).
// forms(μ, a): coefficient of dx^a in θ^μ.  fields(μ, a): component ∂_a of e_μ.
struct FramePoint {
  SplitElement point;
  FrameSide side;
  RealMatrix forms;
  RealMatrix fields;
};

// Right side: θ⁰ = dt, θᵏ = eᵗ dyᵏ, e₀ = ∂_t, e_k = e^{−t}∂_k.
// Left side:  θ⁰ = dt, θᵏ = dyᵏ + yᵏ dt, e₀ = ∂_t − yᵏ∂_k, e_k = ∂_k.
FramePoint frame_at(const SplitElement& p, FrameSide side);

// Vector field component map p ↦ (X^a(p)).
using VectorField = std::function<std::vector<double>(const SplitElement&)>;

VectorField frame_field(FrameSide side, int mu);

// Lie bracket of two vector fields from central differences of their components (error O(h²)).
std::vector<double> lie_bracket(const VectorField& x, const VectorField& y, const SplitElement& p, double h);

struct BracketReport {
  double max_deviation = 0.0;
  int worst_mu = 0;
  int worst_nu = 0;
};

// Compares finite-difference brackets of the frame fields with the structure constants:
// right fields [e₀, e_k] = −e_k, left fields [e₀, e_k] = +e_k, and [e_j, e_k] = 0 on both sides.
BracketReport bracket_check(FrameSide side, const SplitElement& p, double h);

}  // namespace kfuzzy::geometry
