#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kfuzzy/group/elements.hpp"
#include "kfuzzy/group/grid_function.hpp"
#include "kfuzzy/numerics/matrix.hpp"

namespace kfuzzy::representation {

using group::GridAxis;
using group::SplitElement;
using numerics::Complex;

// Samples of a function on ℝ^{D−1} (x-space or k-space), row-major, first axis slowest.
// Off-grid values are taken from the trigonometric interpolant along each axis.
struct SampledField {
  std::vector<GridAxis> axes;
  std::vector<Complex> values;

  static SampledField sample(std::vector<GridAxis> axes, const std::function<Complex(std::span<const double>)>& f);
  std::size_t size() const { return values.size(); }
  std::vector<double> point(std::size_t flat) const;
  double norm() const;  // discrete L² norm with cell volume Π h_a
};

struct ActionResult {
  SampledField field;
  bool truncation_warning = false;  // some source points fell outside the window (taken as 0)
};

// (l^ω(g) f)(x) = e^{iωt} f(e^{−t}x − y) for g = (t, y) in split coordinates. In terms of the
// ordering e^{iλ·x̂}e^{itx̂₀} this is e^{iωt} f(e^{−t}(x − λ)) with λ = eᵗy. The action is a
// homomorphism: l^ω(g₁)l^ω(g₂) = l^ω(g₁g₂).
ActionResult act_l_omega(double omega, const SampledField& f, const SplitElement& g);

// Generator images on the samples (spectral derivatives):
//   mu = 0: (ω + i x^k∂_k) f,   mu = k ≥ 1: i∂_k f.
SampledField generator_l_omega(double omega, const SampledField& f, int mu);

enum class L0FWeight {
  Unitary,  // e^{(D−1)t/2} e^{i eᵗ k·y} f(eᵗ k), norm preserving
  Plain     // e^{i eᵗ k·y} f(eᵗ k)
};

// l⁰_F(g) on k-space samples.
ActionResult act_l0F(const SampledField& f, const SplitElement& g, L0FWeight weight = L0FWeight::Unitary);

using KFunction = std::function<Complex(std::span<const double>)>;
// Same action on a callable, for functions that are not smooth enough for spectral interpolation.
KFunction act_l0F(KFunction f, const SplitElement& g, L0FWeight weight = L0FWeight::Unitary);

// Generator images for the unitary weighting:
//   mu = 0: −i(k·∂ + (D−1)/2) f,   mu = k ≥ 1: k_k f.
SampledField generator_l0F(const SampledField& f, int mu);

// Ray restriction for D = 2: ψ(Q) = e^{Q/2} f(s e^Q) on the positive (s = +1) or negative (s = −1) ray.
// Unitary l⁰_F then acts as ψ(Q) ↦ e^{i s y e^{Q+t}} ψ(Q + t), the Jordan-Schwinger U(t, y).
std::vector<Complex> ray_restriction(const KFunction& f, std::span<const double> q_nodes, int sign);

// (Ff)(k) = ∫ e^{ik·x} f(x) dx by the tensor trapezoid rule over the window of f.
Complex fourier_transform(const SampledField& f, std::span<const double> k);

// Checks F[l^ω(g)ψ](k) = |k|^{−a} (l⁰_F,plain(g) φ)(k) with φ = |k|^{a} Fψ, a = iω + D − 1,
// at the given k points. Returns the largest deviation relative to max |F[l^ω(g)ψ]|.
double fourier_intertwiner_deviation(double omega, const SampledField& psi, const SplitElement& g,
                                     const std::vector<std::vector<double>>& k_points);

}  // namespace kfuzzy::representation
