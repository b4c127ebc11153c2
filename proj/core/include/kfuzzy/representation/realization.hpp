#pragma once

#include <string>
#include <vector>

#include "kfuzzy/numerics/matrix.hpp"
#include "kfuzzy/representation/oscillator.hpp"

namespace kfuzzy::representation {

using numerics::CVector;

enum class VariableKind {
  QLine,      // one copy of L²(ℝ, dQ)
  KSpaceRays  // k = ±e^Q: the two half-line components of L²(ℝ, dk), stacked as [k > 0 | k < 0]
};

// Periodic uniform grid Q_j = −L + j h, h = 2L/M, j = 0 … M−1.
class GridRealization {
 public:
  GridRealization(VariableKind kind, double half_width, std::size_t m);

  VariableKind kind() const { return kind_; }
  double half_width() const { return half_width_; }
  std::size_t m() const { return m_; }
  double step() const { return 2.0 * half_width_ / static_cast<double>(m_); }
  double node(std::size_t j) const { return -half_width_ + step() * static_cast<double>(j); }
  std::vector<double> nodes() const;
  // M for a Q-line, 2M for the two rays.
  std::size_t carrier_size() const { return kind_ == VariableKind::QLine ? m_ : 2 * m_; }

 private:
  VariableKind kind_;
  double half_width_;
  std::size_t m_;
};

// Matrices representing x̂₀ and x̂_k on a finite carrier.
struct RepOperators {
  CMatrix x0;
  std::vector<CMatrix> xk;
  std::string label;

  int dim() const { return static_cast<int>(xk.size()) + 1; }
  std::size_t size() const { return x0.rows(); }
};

// x̂₀ ↦ −i∂_Q, x̂_k ↦ λ_k e^Q. On the grid −i∂_Q is the spectral derivative, so e^{itX0} is the
// exact periodic shift by t. For a truncation X0 = P and X_k = λ_k expm(Q_N).
// λ must be a unit vector within 1e-12 (PreconditionError otherwise). QLine grids only.
RepOperators jordan_schwinger(const GridRealization& grid, const std::vector<double>& lambda);
RepOperators jordan_schwinger(const OscillatorTruncation& osc, const std::vector<double>& lambda);

// D = 2 operators of l⁰_F on a KSpaceRays grid: the Jordan-Schwinger pair for λ = +1 on the first
// block and λ = −1 on the second.
RepOperators two_ray_operators(const GridRealization& grid);

// Spectral derivative matrix −i∂ on a periodic grid of n points with step h (Hermitian).
CMatrix spectral_momentum(std::size_t n, double h);

// ‖([X0, X_k] + i X_k) V‖_F for the orthonormal columns V (the states on which the algebra is probed).
double projected_commutator_deviation(const RepOperators& ops, const CMatrix& states, std::size_t k = 0);
// max_{j,k} ‖[X_j, X_k]‖_F
double spatial_commutator_norm(const RepOperators& ops);

// First `count` basis vectors of an n-dimensional space.
CMatrix low_block_states(std::size_t n, std::size_t count);
// cos⁴(πQ/L)·sin(jπ(Q + L/2)/L) on |Q| ≤ L/2 (zero elsewhere), j = 1 … count, orthonormalized.
CMatrix bump_test_states(const GridRealization& grid, std::size_t count);
// Hermite functions h_0 … h_{count−1} centred at `center` with unit width, sampled on the grid
// and orthonormalized (QLine layout).
CMatrix hermite_test_states(const GridRealization& grid, std::size_t count, double center = 0.0);

// Gram-Schmidt (twice) on the columns.
CMatrix orthonormalize_columns(const CMatrix& v);

}  // namespace kfuzzy::representation
