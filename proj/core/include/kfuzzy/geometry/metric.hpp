#pragma once

#include <utility>
#include <vector>

#include "kfuzzy/geometry/frames.hpp"
#include "kfuzzy/geometry/real_matrix.hpp"
#include "kfuzzy/tolerances.hpp"

namespace kfuzzy::geometry {

// Right-invariant metric g = G_{μν} θ^μ θ^ν given by its constant frame components.
class MetricSpec {
 public:
  explicit MetricSpec(RealMatrix g, const Tolerances& tol = default_tolerances());
  static MetricSpec planar(int dim);  // diag(1, −1, …, −1)

  int dim() const { return static_cast<int>(g_.rows()); }
  const RealMatrix& g() const { return g_; }
  int n_plus() const { return n_plus_; }
  int n_minus() const { return n_minus_; }
  double det() const { return det_; }
  bool lorentzian() const { return n_plus_ == 1 && n_minus_ == dim() - 1; }

 private:
  RealMatrix g_;
  int n_plus_ = 0;
  int n_minus_ = 0;
  double det_ = 0.0;
};

// Coordinate components of the metric at p in split coordinates (t, y).
RealMatrix metric_at(const MetricSpec& spec, const SplitElement& p);

// Planar metric dt² + σ e^{2t}|dy|² with σ = −1 (de Sitter) or +1 (Euclidean variant).
RealMatrix planar_metric(const SplitElement& p, double sigma = -1.0);

// Largest entry of the Lie derivative of the metric along the given frame fields at p,
// from central differences with step h. Invariance under right translations makes the
// left-invariant fields Killing for every right-invariant metric.
double killing_deviation(const MetricSpec& spec, FrameSide fields, const SplitElement& p, double h);

// Coordinate change of the two-dimensional metric family
//   (1/τ²)(cos2θ dτ² + 2 sin2θ dτ dx − cos2θ dx²),  τ = e^{−t},
// onto (1/τ′²)(dτ′² − dx′²). The pullback of the target equals cos2θ times the source.
struct Reduction2D {
  double theta = 0.0;
  double scale = 1.0;  // cos 2θ
  double branch = 1.0; // sign multiplying τ sin2θ/√|cos2θ| in x′
  std::pair<double, double> apply(double tau, double x) const;
  RealMatrix jacobian() const;  // ∂(τ′, x′)/∂(τ, x)
};

// θ ∈ (−π/4, 3π/4], cos 2θ ≠ 0. Throws PreconditionError in the flat cases θ = π/4, 3π/4.
Reduction2D reduce_metric_2d(double theta);

// The two-dimensional family above at (τ, x).
RealMatrix family_metric_2d(double theta, double tau, double x);
// Planar target (1/τ²)(dτ² − dx²).
RealMatrix planar_metric_tau(double tau, double x);

// Map t′ = t, y′ = A y + b e^{−t} with pullback of the planar metric equal to scale × metric_at(spec).
// A is built in stages: shear y ↦ y + e^{−t} c (c = −G_ss⁻¹G_0), rotation Rᵀ diagonalizing G_ss,
// and per-axis scalings.
struct ReductionMap {
  int dim = 2;
  double sigma = -1.0;
  double scale = 1.0;
  std::vector<double> shear;     // c
  RealMatrix rotation;           // R with G_ss = R diag(λ) Rᵀ
  std::vector<double> scalings;  // √(σ·scale·λ_i)
  RealMatrix a;                  // diag(scalings)·Rᵀ
  std::vector<double> b;         // A c

  SplitElement apply(const SplitElement& p) const;
  RealMatrix jacobian(const SplitElement& p) const;
};

struct ReductionOptions {
  bool euclidean = false;  // target dt² + e^{2t}|dy|² instead of the de Sitter form
};

// Throws PreconditionError when the signature does not match, or when the spatial block cannot be
// brought to the planar form (for Lorentzian D ≥ 3 this requires a negative definite G_ss).
ReductionMap reduce_metric_general(const MetricSpec& spec, const ReductionOptions& opts = {});

// max over points of |Jᵀ P(p′) J − scale·g(p)| / |scale·g(p)|, entrywise maxima.
double reduction_residual(const MetricSpec& spec, const ReductionMap& map, const std::vector<SplitElement>& points);

}  // namespace kfuzzy::geometry
