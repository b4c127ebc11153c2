#pragma once

#include <functional>
#include <string>
#include <vector>

#include "kfuzzy/group/grid_function.hpp"
#include "kfuzzy/numerics/linalg.hpp"
#include "kfuzzy/representation/realization.hpp"

namespace kfuzzy::fuzzy {

using group::GridAxis;
using group::GridFunction;
using group::SplitElement;
using numerics::CMatrix;
using numerics::Complex;
using numerics::CVector;
using representation::GridRealization;
using representation::RepOperators;

// φ₀ on a grid carrier, given as functions of Q on each ray so that shifted states can be evaluated
// exactly. An empty function means φ₀ vanishes on that ray. On a Q-line only `positive` is used.
struct GridProfile {
  std::function<Complex(double)> positive;
  std::function<Complex(double)> negative;
};

struct InitialState {
  CVector coefficients;  // unit norm in the carrier
  std::string descriptor;
  bool radial = true;  // φ₀ depends on |k| only (automatic on a single ray)
  GridProfile profile;  // grid carriers only
};

// |0⟩ of an oscillator truncation of dimension n.
InitialState oscillator_ground_state(std::size_t n);
// Normalized Gaussian exp(−(Q − center)²/(2 width²)) on the positive ray (QLine or KSpaceRays).
InitialState gaussian_state(const GridRealization& grid, double center = 0.0, double width = 1.0);

// States |t, y⟩ = e^{itX0} e^{iy·X} |φ₀⟩ over a lattice of group points.
class CoherentFamily {
 public:
  // Finite-matrix carrier: the unitaries come from spectral decompositions of the Hermitian generators.
  static CoherentFamily from_operators(RepOperators ops, InitialState phi0, std::vector<GridAxis> lattice);
  // Grid carrier (D = 2): e^{itX0} is the exact shift Q ↦ Q + t and e^{iyX} the phase e^{±iye^Q},
  // so |t, y⟩(Q) = e^{±iye^{Q+t}} φ₀(Q + t) on each ray.
  static CoherentFamily from_grid(const GridRealization& grid, InitialState phi0, std::vector<GridAxis> lattice,
                                  int lambda_sign = 1);

  int dim() const { return static_cast<int>(lattice_.size()); }
  std::size_t carrier_size() const { return phi0_.coefficients.size(); }
  const RepOperators& ops() const { return ops_; }
  const InitialState& initial_state() const { return phi0_; }
  const std::vector<GridAxis>& lattice() const { return lattice_; }
  std::size_t lattice_size() const;
  SplitElement lattice_point(std::size_t flat) const;

  CVector state(const SplitElement& g) const;
  // Reference path for finite-matrix carriers: expm(itX0)·Π_k expm(iy_k X_k)·φ₀.
  CVector state_expm(const SplitElement& g) const;

 private:
  CoherentFamily() = default;

  RepOperators ops_;
  InitialState phi0_;
  std::vector<GridAxis> lattice_;
  // finite-matrix carrier: H = V diag(w) V†
  std::vector<numerics::HermitianEigen> spectral_;
  // grid carrier
  bool grid_ = false;
  bool two_ray_ = false;
  int lambda_sign_ = 1;
  std::vector<double> nodes_;
  double sqrt_h_ = 1.0;
};

CVector coherent_state(const CoherentFamily& family, const SplitElement& g);

// Q⁻¹(F)(t, y) = ⟨t, y|F|t, y⟩ at every lattice point.
GridFunction dequantize(const CMatrix& f, const CoherentFamily& family);
// Q⁻¹(F) at one point.
Complex dequantize_at(const CMatrix& f, const CoherentFamily& family, const SplitElement& g);
// Q⁻¹(F₁F₂).
GridFunction star(const CMatrix& f1, const CMatrix& f2, const CoherentFamily& family);

struct ComderReport {
  double time_deviation = 0.0;   // max |i∂_t Q⁻¹(F) − Q⁻¹([X0, F])| / max |Q⁻¹([X0, F])|
  double space_deviation = 0.0;  // same for i e^{−t}∂_j Q⁻¹(F) against Q⁻¹([X_j, F])
  double max_deviation() const { return std::max(time_deviation, space_deviation); }
};

// Five-point (fourth order) central differences with step h around every lattice point.
ComderReport comder_check(const CMatrix& f, const CoherentFamily& family, double h);

struct QuantizeResult {
  CMatrix f;
  std::size_t rank = 0;
  double condition = 0.0;
  double residual = 0.0;  // ‖Q⁻¹(F) − f‖/‖f‖ over the lattice
};

// Least-squares F (restricted to the leading block × block matrix units, block = 0 for all) with
// Q⁻¹(F) ≈ samples. Throws DimensionError when there are fewer lattice points than unknowns.
QuantizeResult quantize_ls(const GridFunction& samples, const CoherentFamily& family, std::size_t block = 0);

struct BOperatorOptions {
  bool assemble = true;           // build the full matrix (otherwise only the diagnostics)
  std::vector<bool> sector;       // carrier indices of the selected sector; empty = all
  CMatrix test_states;            // orthonormal columns inside the sector, for the off-diagonal ratio
};

struct BOperatorResult {
  CMatrix b;
  double trace = 0.0;
  double complement_weight = 0.0;  // Σ_{i ∉ sector} B_ii / tr B
  double offdiag_ratio = 0.0;      // ‖offdiag(VᵀBV)‖_F / ‖diag(VᵀBV)‖_F on the test states
  std::vector<double> test_diagonal;
  bool conditioning_warning = false;  // lattice step too coarse for the oscillation of the states
};

// B = Σ w(t, y)|t, y⟩⟨t, y| with trapezoid weights times the left Haar density over the lattice.
BOperatorResult b_operator(const CoherentFamily& family, const BOperatorOptions& opts = {});

}  // namespace kfuzzy::fuzzy
