#pragma once

#include <vector>

#include "kfuzzy/geometry/real_matrix.hpp"
#include "kfuzzy/group/elements.hpp"

namespace kfuzzy::geometry {

using group::SplitElement;

// Planar chart of de Sitter space in (D+1)-dimensional Minkowski space:
//   X⁰ = sinh t + eᵗ|y|²/2,  Xᵏ = eᵗ yᵏ,  X^D = cosh t − eᵗ|y|²/2.
std::vector<double> embed(const SplitElement& p);

// Variant with both quadratic terms entering with a minus sign and X⁰, X^D negated:
//   X⁰ = −sinh t − eᵗ|y|²/2,  X^D = −cosh t − eᵗ|y|²/2.
// Kept for comparison; it does not lie on the hyperboloid away from y = 0.
std::vector<double> embed_alternate_signs(const SplitElement& p);

// −(X⁰)² + Σ(Xᵏ)² + (X^D)² − 1
double quadric_residual(const std::vector<double>& x);

// X⁰ + X^D, equal to eᵗ on the chart.
double half_space_witness(const std::vector<double>& x);

// ∂X^A/∂(t, yᵏ) for the standard chart, (D+1)×D.
RealMatrix embedding_jacobian(const SplitElement& p);

// Jᵀ η J with η = diag(1, −1, …, −1) over (X⁰, Xᵏ, X^D); equals dt² − e^{2t}|dy|².
RealMatrix induced_metric(const SplitElement& p);

}  // namespace kfuzzy::geometry
