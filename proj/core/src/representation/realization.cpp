#include "kfuzzy/representation/realization.hpp"

#include <cmath>
#include <numbers>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/numerics/dft.hpp"
#include "kfuzzy/numerics/linalg.hpp"

namespace kfuzzy::representation {

namespace {

void check_unit(const std::vector<double>& lambda) {
  if (lambda.empty()) throw DimensionError("jordan_schwinger: λ must have D−1 ≥ 1 components");
  double s = 0.0;
  for (double l : lambda) s += l * l;
  if (std::abs(std::sqrt(s) - 1.0) > 1e-12) throw PreconditionError("jordan_schwinger: λ must be a unit vector");
}

}  // namespace

GridRealization::GridRealization(VariableKind kind, double half_width, std::size_t m)
    : kind_(kind), half_width_(half_width), m_(m) {
  if (m < 16 || (m & (m - 1)) != 0) throw PreconditionError("GridRealization: M must be a power of two, at least 16");
  if (!(half_width > 0.0) || !std::isfinite(half_width)) throw PreconditionError("GridRealization: window must be finite and positive");
}

std::vector<double> GridRealization::nodes() const {
  std::vector<double> q(m_);
  for (std::size_t j = 0; j < m_; ++j) q[j] = node(j);
  return q;
}

CMatrix spectral_momentum(std::size_t n, double h) {
  const auto k = numerics::wavenumbers(n, h);
  CMatrix d(n, n);
  CVector e(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::fill(e.begin(), e.end(), Complex{});
    e[j] = 1.0;
    CVector f = numerics::dft(e, numerics::Direction::Forward);
    for (std::size_t m = 0; m < n; ++m) f[m] *= k[m];
    const CVector col = numerics::dft(f, numerics::Direction::Inverse);
    for (std::size_t i = 0; i < n; ++i) d(i, j) = col[i];
  }
  // exact Hermitian symmetry
  return 0.5 * (d + d.adjoint());
}

RepOperators jordan_schwinger(const GridRealization& grid, const std::vector<double>& lambda) {
  check_unit(lambda);
  if (grid.kind() != VariableKind::QLine) throw PreconditionError("jordan_schwinger: needs a Q-line grid");
  RepOperators ops;
  ops.x0 = spectral_momentum(grid.m(), grid.step());
  std::vector<double> eq(grid.m());
  for (std::size_t j = 0; j < grid.m(); ++j) eq[j] = std::exp(grid.node(j));
  for (double l : lambda) {
    std::vector<double> d(eq);
    for (double& v : d) v *= l;
    ops.xk.push_back(CMatrix::diagonal(std::span<const double>(d)));
  }
  ops.label = "jordan-schwinger/grid";
  return ops;
}

RepOperators jordan_schwinger(const OscillatorTruncation& osc, const std::vector<double>& lambda) {
  check_unit(lambda);
  RepOperators ops;
  ops.x0 = osc.p();
  const CMatrix eq = numerics::expm(osc.q());
  for (double l : lambda) ops.xk.push_back(l * eq);
  ops.label = "jordan-schwinger/oscillator";
  return ops;
}

RepOperators two_ray_operators(const GridRealization& grid) {
  if (grid.kind() != VariableKind::KSpaceRays) throw PreconditionError("two_ray_operators: needs a k-space grid");
  const std::size_t m = grid.m();
  const CMatrix p = spectral_momentum(m, grid.step());
  RepOperators ops;
  ops.x0 = CMatrix(2 * m, 2 * m);
  CMatrix x1(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      ops.x0(i, j) = p(i, j);
      ops.x0(m + i, m + j) = p(i, j);
    }
    const double e = std::exp(grid.node(i));
    x1(i, i) = e;
    x1(m + i, m + i) = -e;
  }
  ops.xk.push_back(std::move(x1));
  ops.label = "l0F/two-ray";
  return ops;
}

double projected_commutator_deviation(const RepOperators& ops, const CMatrix& states, std::size_t k) {
  if (k >= ops.xk.size()) throw DimensionError("projected_commutator_deviation: no such spatial generator");
  const CMatrix& xk = ops.xk[k];
  const CMatrix c = numerics::commutator(ops.x0, xk) + Complex(0.0, 1.0) * xk;
  return (c * states).norm_fro();
}

double spatial_commutator_norm(const RepOperators& ops) {
  double worst = 0.0;
  for (std::size_t j = 0; j < ops.xk.size(); ++j)
    for (std::size_t k = j + 1; k < ops.xk.size(); ++k)
      worst = std::max(worst, numerics::commutator(ops.xk[j], ops.xk[k]).norm_fro());
  return worst;
}

CMatrix low_block_states(std::size_t n, std::size_t count) {
  if (count > n) throw DimensionError("low_block_states: count exceeds dimension");
  CMatrix v(n, count);
  for (std::size_t j = 0; j < count; ++j) v(j, j) = 1.0;
  return v;
}

CMatrix orthonormalize_columns(const CMatrix& v) {
  CMatrix q = v;
  for (std::size_t j = 0; j < q.cols(); ++j) {
    for (int pass = 0; pass < 2; ++pass)
      for (std::size_t i = 0; i < j; ++i) {
        Complex d = 0.0;
        for (std::size_t r = 0; r < q.rows(); ++r) d += std::conj(q(r, i)) * q(r, j);
        for (std::size_t r = 0; r < q.rows(); ++r) q(r, j) -= d * q(r, i);
      }
    double nrm = 0.0;
    for (std::size_t r = 0; r < q.rows(); ++r) nrm += std::norm(q(r, j));
    nrm = std::sqrt(nrm);
    if (nrm == 0.0) throw DimensionError("orthonormalize_columns: linearly dependent columns");
    for (std::size_t r = 0; r < q.rows(); ++r) q(r, j) /= nrm;
  }
  return q;
}

CMatrix bump_test_states(const GridRealization& grid, std::size_t count) {
  const double l = grid.half_width(), pi = std::numbers::pi;
  CMatrix v(grid.m(), count);
  for (std::size_t i = 0; i < grid.m(); ++i) {
    const double q = grid.node(i);
    if (std::abs(q) > 0.5 * l) continue;
    const double c = std::cos(pi * q / l), w = c * c * c * c;
    for (std::size_t j = 0; j < count; ++j) v(i, j) = w * std::sin(static_cast<double>(j + 1) * pi * (q + 0.5 * l) / l);
  }
  return orthonormalize_columns(v);
}

CMatrix hermite_test_states(const GridRealization& grid, std::size_t count, double center) {
  CMatrix v(grid.m(), count);
  for (std::size_t i = 0; i < grid.m(); ++i) {
    const double x = grid.node(i) - center, g = std::exp(-0.5 * x * x);
    // physicists' recurrence H_{n+1} = 2x H_n − 2n H_{n−1}, scaled to avoid overflow
    double h0 = 1.0, h1 = 2.0 * x;
    for (std::size_t j = 0; j < count; ++j) {
      double hj;
      if (j == 0) hj = h0;
      else if (j == 1) hj = h1;
      else {
        const double h2 = 2.0 * x * h1 - 2.0 * static_cast<double>(j - 1) * h0;
        h0 = h1;
        h1 = h2;
        hj = h2;
      }
      v(i, j) = g * hj / std::sqrt(std::pow(2.0, static_cast<double>(j)) * std::tgamma(static_cast<double>(j) + 1.0));
    }
  }
  return orthonormalize_columns(v);
}

}  // namespace kfuzzy::representation
