#include <algorithm>
#include <cmath>
#include <numeric>

#include "kfuzzy/numerics/linalg.hpp"

namespace kfuzzy::numerics {

namespace {

double offdiag_norm(const CMatrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

}  // namespace

HermitianEigen eig_hermitian(const CMatrix& m, const Tolerances& tol) {
  if (!m.is_square()) throw DimensionError("eig_hermitian: matrix must be square");
  if (!m.all_finite()) throw InputError("eig_hermitian: non-finite entry");
  const std::size_t n = m.rows();
  const double scale = std::max(1.0, m.norm_max());
  double asym = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) asym = std::max(asym, std::abs(m(i, j) - std::conj(m(j, i))));
  if (asym > tol.hermitian_check * scale) throw PreconditionError("eig_hermitian: matrix is not Hermitian");

  CMatrix a = m;
  for (std::size_t i = 0; i < n; ++i) a(i, i) = a(i, i).real();
  CMatrix v = CMatrix::identity(n);
  const double fro = std::max(a.norm_fro(), 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    if (offdiag_norm(a) <= tol.jacobi_offdiag * fro) break;
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const Complex g = a(p, q);
        const double ag = std::abs(g);
        if (ag <= 1e-300) continue;
        const double alpha = a(p, p).real(), beta = a(q, q).real();
        const Complex ph = std::conj(g) / ag;  // e^{-iφ}
        const double theta = (beta - alpha) / (2.0 * ag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0), s = t * c;
        // columns: A ← A J with J = [[c, s], [−s e^{-iφ}, c e^{-iφ}]]
        for (std::size_t k = 0; k < n; ++k) {
          const Complex akp = a(k, p), akq = a(k, q) * ph;
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
          const Complex vkp = v(k, p), vkq = v(k, q) * ph;
          v(k, p) = c * vkp - s * vkq;
          v(k, q) = s * vkp + c * vkq;
        }
        // rows: A ← J† A
        const Complex phc = std::conj(ph);
        for (std::size_t k = 0; k < n; ++k) {
          const Complex apk = a(p, k), aqk = a(q, k) * phc;
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out{std::vector<double>(n), CMatrix(n, n)};
  for (std::size_t k = 0; k < n; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

}  // namespace kfuzzy::numerics
