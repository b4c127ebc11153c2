#pragma once

#include <vector>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/numerics/matrix.hpp"
#include "kfuzzy/tolerances.hpp"

namespace kfuzzy::numerics {

// Matrix exponential by scaling and squaring with the degree-13 diagonal Padé approximant.
CMatrix expm(const CMatrix& m);

// Solves A X = B by LU with partial pivoting. Throws RangeError if A is numerically singular.
CMatrix lu_solve(const CMatrix& a, const CMatrix& b);

struct HermitianEigen {
  std::vector<double> values;  // ascending
  CMatrix vectors;             // columns are orthonormal eigenvectors
};

// Cyclic Jacobi diagonalization of a Hermitian matrix.
HermitianEigen eig_hermitian(const CMatrix& m, const Tolerances& tol = default_tolerances());

struct EigenFlags {
  double condition = 1.0;   // 1/|y*x| for unit left/right vectors; infinity if not computed
  bool converged = true;    // residual within tolerance
  bool ill_conditioned = false;
  bool defective = false;
};

struct GeneralEigen {
  CVector values;
  CMatrix vectors;  // unit-norm right eigenvectors, one per column
  std::vector<EigenFlags> flags;
  std::vector<double> residuals;  // ‖Mv − λv‖ / ‖M‖
};

struct GeneralEigenOptions {
  bool balance = true;
  bool compute_vectors = true;
  bool compute_condition = true;  // needs left eigenvectors (one extra triangular solve sweep)
};

// Thrown when the QR iteration hits its cap. Carries the eigenvalues deflated so far.
class EigenConvergenceError : public ConvergenceError {
 public:
  EigenConvergenceError(const std::string& what, CVector converged)
      : ConvergenceError(what), converged_(std::move(converged)) {}
  const CVector& converged() const { return converged_; }

 private:
  CVector converged_;
};

// Balancing, Hessenberg reduction, and shifted complex QR iteration to Schur form.
GeneralEigen eig_general(const CMatrix& m, const GeneralEigenOptions& opts = {},
                         const Tolerances& tol = default_tolerances());

struct Svd {
  CMatrix u;                   // m×k, orthonormal columns
  std::vector<double> sigma;   // k values, descending
  CMatrix v;                   // n×k, orthonormal columns
};

// Thin SVD by one-sided Jacobi rotations. k = min(m, n).
Svd svd(const CMatrix& a, const Tolerances& tol = default_tolerances());

struct LeastSquaresResult {
  CVector x;
  std::size_t rank = 0;
  std::vector<double> singular_values;
  double condition = 0.0;  // σ_max/σ_min over the retained values
  double residual = 0.0;   // ‖Ax − b‖
};

// Minimum-norm least-squares solution with singular values below the relative threshold dropped.
LeastSquaresResult pinv_least_squares(const CMatrix& a, std::span<const Complex> b,
                                      const Tolerances& tol = default_tolerances());

}  // namespace kfuzzy::numerics
