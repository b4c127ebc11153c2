#pragma once

#include <vector>

#include "kfuzzy/fuzzy/coherent.hpp"
#include "kfuzzy/tolerances.hpp"

namespace kfuzzy::fuzzy {

// L₀(F) = −[X0,[X0,F]] − i(D−1)[X0,F] + δ^{ij}[X_i,[X_j,F]] as an N²×N² matrix acting on the
// row-major vectorization vec(F)_{iN+j} = F_ij. The fuzzy Laplace-Beltrami equation L₀(F) + μ²F = 0
// makes the eigenvalues of this matrix equal to −μ².
// Guards (MemoryGuardError): N² ≤ max_superoperator_dim for D = 2, N ≤ max_truncation_d3 for D ≥ 3.
CMatrix fuzzy_laplacian(const RepOperators& ops, const Tolerances& tol = default_tolerances());

// L₀(F) by direct matrix products, for checking the assembled superoperator.
CMatrix apply_fuzzy_laplacian(const RepOperators& ops, const CMatrix& f);

// F with F_ij = v_{iN+j}.
CMatrix unvec(std::span<const Complex> v, std::size_t n);

struct FuzzySpectrum {
  std::size_t n = 0;  // truncation N
  int dim = 2;
  numerics::GeneralEigen eigen;
};

// Throws ConvergenceError when the QR iteration does not converge.
FuzzySpectrum solve_fuzzy_spectrum(const RepOperators& ops, const Tolerances& tol = default_tolerances());

struct ModeCompareOptions {
  std::size_t candidates = 8;       // eigen-matrices compared, ranked by weight in the leading N/2 block
  double lambda_min = 1e-3;         // |λ| search grid, logarithmic
  double lambda_max = 31.622776601683793;
  std::size_t lambda_points = 300;  // per sign
  double overlap_floor = 0.5;       // below this the mode is flagged unmatched
  std::size_t residual_margin = 2;
  double trivial_eigenvalue = 1e-8;  // |−μ²| below this (relative to the spectral radius) is the identity sector
};

struct ModeMatch {
  std::size_t index = 0;      // column in the eigen decomposition
  Complex eigenvalue;         // −μ²
  Complex mu2;
  Complex nu;
  double low_block_weight = 0.0;
  bool matched = false;
  double overlap = 0.0;       // |⟨f, φ⟩| / (‖f‖‖φ‖)
  double lambda = 0.0;        // signed magnitude along the representation direction
  int kind = 1;
  Complex scale;              // fitted c in f ≈ c·φ
  double residual = 0.0;      // relative residual of the dequantized field under the classical operator
  double classical_residual = 0.0;  // same for the fitted classical samples
  Complex mu2_fit;            // −⟨f, A f⟩/⟨f, f⟩ with A the operator at μ² = 0
  GridFunction samples;       // dequantized field
};

struct SpectralReport {
  std::size_t n = 0;
  int dim = 2;
  std::vector<Complex> eigenvalues;
  std::vector<ModeMatch> modes;
  double best_overlap = 0.0;
  double median_residual = 0.0;  // over matched modes
  std::size_t unconverged = 0;    // eigenpairs flagged by the solver
  double truncation_deviation = 0.0;  // ‖([X0,X1] + iX1) on the leading N/2 block‖_F
};

// Dequantizes the selected eigen-matrices over the family lattice and fits each against
// classical_mode samples with the same μ², over |λ|, its sign and the Hankel kind.
SpectralReport mode_compare(const FuzzySpectrum& spectrum, const CoherentFamily& family,
                            const ModeCompareOptions& opts = {});

}  // namespace kfuzzy::fuzzy
