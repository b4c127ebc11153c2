#pragma once

namespace kfuzzy {

// Default numerical tolerances. Every kernel that uses one of these accepts an
// override through its options struct; this is the single place the defaults live.
struct Tolerances {
  // numerics
  double hermitian_check = 1e-12;       // relative ‖M − M†‖ accepted by eig_hermitian
  double jacobi_offdiag = 1e-15;        // Jacobi sweeps stop below this relative off-norm
  double qr_deflation = 1e-12;          // absolute floor for subdiagonal deflation, times ‖H‖
  int qr_iterations_per_dim = 30;       // QR iteration cap is this times the dimension
  double eig_residual = 1e-8;           // ‖Mv − λv‖/‖M‖ accepted as converged
  double ill_conditioned = 1e8;         // eigenvalue condition number flagged as ill-conditioned
  double defective = 1e11;              // condition number treated as a defective eigenvalue
  double svd_truncation = 1e-10;        // σ/σ_max below this is dropped by the pseudo-inverse

  // special functions
  double bessel_series_tail = 1e-17;    // relative size of the last kept series term
  double near_integer = 1e-6;           // distance to an integer that triggers limit handling
  double integer_limit_step = 1e-5;     // ε used for the ν ± ε averaging

  // group / geometry
  double phi_series_cutoff = 1e-4;      // below this |x| the Taylor series of φ is used
  double degenerate_det = 1e-12;        // |det G| below this is treated as degenerate
  double edge_mass = 1e-8;              // boundary ring magnitude that triggers truncation warnings

  // fuzzy
  double unit_norm = 1e-12;             // accepted deviation of the initial state norm
  int max_superoperator_dim = 4096;     // N² limit for the fuzzy Laplacian
  int max_truncation_d3 = 12;           // N limit for D ≥ 3 fuzzy Laplacians
};

inline const Tolerances& default_tolerances() {
  static const Tolerances t{};
  return t;
}

}  // namespace kfuzzy
