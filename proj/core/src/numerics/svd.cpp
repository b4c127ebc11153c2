#include <algorithm>
#include <cmath>
#include <numeric>

#include "kfuzzy/numerics/linalg.hpp"

namespace kfuzzy::numerics {

namespace {

// One-sided Jacobi on the columns of a (m ≥ n). Returns a with orthogonal columns and v.
void orthogonalize_columns(CMatrix& a, CMatrix& v) {
  const std::size_t m = a.rows(), n = a.cols();
  CMatrix at = a.transpose();  // rows of at are columns of a
  CMatrix vt = CMatrix::identity(n);
  constexpr double kTol = 1e-15;
  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        Complex* ap = at.data() + p * m;
        Complex* aq = at.data() + q * m;
        double alpha = 0.0, beta = 0.0;
        Complex gamma = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
          alpha += std::norm(ap[i]);
          beta += std::norm(aq[i]);
          gamma += std::conj(ap[i]) * aq[i];
        }
        const double ag = std::abs(gamma);
        if (ag <= kTol * std::sqrt(alpha * beta) || ag == 0.0) continue;
        rotated = true;
        const Complex ph = std::conj(gamma) / ag;  // e^{-iφ}
        const double zeta = (beta - alpha) / (2.0 * ag);
        const double t = (zeta >= 0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
        const double c = 1.0 / std::sqrt(1.0 + t * t), s = c * t;
        for (std::size_t i = 0; i < m; ++i) {
          const Complex x = ap[i], y = aq[i] * ph;
          ap[i] = c * x - s * y;
          aq[i] = s * x + c * y;
        }
        Complex* vp = vt.data() + p * n;
        Complex* vq = vt.data() + q * n;
        for (std::size_t i = 0; i < n; ++i) {
          const Complex x = vp[i], y = vq[i] * ph;
          vp[i] = c * x - s * y;
          vq[i] = s * x + c * y;
        }
      }
    }
    if (!rotated) break;
  }
  a = at.transpose();
  v = vt.transpose();
}

}  // namespace

Svd svd(const CMatrix& a_in, const Tolerances&) {
  if (!a_in.all_finite()) throw InputError("svd: non-finite entry");
  const bool wide = a_in.rows() < a_in.cols();
  CMatrix a = wide ? a_in.adjoint() : a_in;
  const std::size_t m = a.rows(), n = a.cols();
  CMatrix v;
  orthogonalize_columns(a, v);

  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) {
    double s = 0.0;
    for (std::size_t i = 0; i < m; ++i) s += std::norm(a(i, j));
    norms[j] = std::sqrt(s);
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return norms[i] > norms[j]; });

  Svd out{CMatrix(m, n), std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t j = order[k];
    out.sigma[k] = norms[j];
    for (std::size_t i = 0; i < m; ++i) out.u(i, k) = norms[j] > 0.0 ? a(i, j) / norms[j] : Complex(0.0);
    for (std::size_t i = 0; i < n; ++i) out.v(i, k) = v(i, j);
  }
  if (wide) std::swap(out.u, out.v);  // A* = U Σ V*  ⇒  A = V Σ U*
  return out;
}

LeastSquaresResult pinv_least_squares(const CMatrix& a, std::span<const Complex> b, const Tolerances& tol) {
  if (a.rows() != b.size()) throw DimensionError("pinv_least_squares: right-hand side length mismatch");
  const Svd s = svd(a, tol);
  LeastSquaresResult out;
  out.singular_values = s.sigma;
  out.x.assign(a.cols(), Complex(0.0));
  const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
  double smin_kept = 0.0;
  for (std::size_t k = 0; k < s.sigma.size(); ++k) {
    if (smax == 0.0 || s.sigma[k] < tol.svd_truncation * smax) continue;
    ++out.rank;
    smin_kept = s.sigma[k];
    Complex c = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) c += std::conj(s.u(i, k)) * b[i];
    c /= s.sigma[k];
    for (std::size_t i = 0; i < a.cols(); ++i) out.x[i] += c * s.v(i, k);
  }
  out.condition = out.rank > 0 ? smax / smin_kept : 0.0;
  const CVector ax = a * std::span<const Complex>(out.x);
  double r2 = 0.0;
  for (std::size_t i = 0; i < ax.size(); ++i) r2 += std::norm(ax[i] - b[i]);
  out.residual = std::sqrt(r2);
  return out;
}

}  // namespace kfuzzy::numerics
