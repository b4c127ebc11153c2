#include <cmath>

#include "kfuzzy/numerics/linalg.hpp"

namespace kfuzzy::numerics {

namespace {

constexpr double kPade13[14] = {64764752532480000.0, 32382376266240000.0, 7771770303897600.0,
                                1187353796428800.0,  129060195264000.0,   10559470521600.0,
                                670442572800.0,      33522128640.0,       1323241920.0,
                                40840800.0,          960960.0,            16380.0,
                                182.0,               1.0};
constexpr double kTheta13 = 5.371920351148152;

CMatrix combine(const CMatrix& a2, const CMatrix& a4, const CMatrix& a6, double c6, double c4, double c2,
                std::size_t n, double c0) {
  CMatrix r = a6 * Complex(c6) + a4 * Complex(c4) + a2 * Complex(c2);
  for (std::size_t i = 0; i < n; ++i) r(i, i) += c0;
  return r;
}

}  // namespace

CMatrix lu_solve(const CMatrix& a, const CMatrix& b) {
  if (!a.is_square() || a.rows() != b.rows()) throw DimensionError("lu_solve: shape mismatch");
  const std::size_t n = a.rows(), m = b.cols();
  CMatrix lu = a, x = b;
  const double scale = std::max(a.norm_max(), 1e-300);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    double best = std::abs(lu(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      if (std::abs(lu(i, k)) > best) {
        best = std::abs(lu(i, k));
        p = i;
      }
    }
    if (best <= 1e-300 * scale || best == 0.0) throw RangeError("lu_solve: matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(lu(k, j), lu(p, j));
      for (std::size_t j = 0; j < m; ++j) std::swap(x(k, j), x(p, j));
    }
    const Complex inv = 1.0 / lu(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = lu(i, k) * inv;
      if (f == Complex(0.0)) continue;
      lu(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) lu(i, j) -= f * lu(k, j);
      for (std::size_t j = 0; j < m; ++j) x(i, j) -= f * x(k, j);
    }
  }
  for (std::size_t kk = n; kk-- > 0;) {
    const Complex inv = 1.0 / lu(kk, kk);
    for (std::size_t j = 0; j < m; ++j) {
      Complex s = x(kk, j);
      for (std::size_t i = kk + 1; i < n; ++i) s -= lu(kk, i) * x(i, j);
      x(kk, j) = s * inv;
    }
  }
  return x;
}

CMatrix expm(const CMatrix& m) {
  if (!m.is_square()) throw DimensionError("expm: matrix must be square");
  if (!m.all_finite()) throw InputError("expm: non-finite entry");
  const std::size_t n = m.rows();
  if (n == 0) return m;

  const double norm = m.norm1();
  int s = 0;
  if (norm > kTheta13) s = static_cast<int>(std::ceil(std::log2(norm / kTheta13)));
  if (s > 1000) throw RangeError("expm: norm too large");
  const CMatrix a = m * Complex(std::ldexp(1.0, -s));

  const CMatrix a2 = a * a;
  const CMatrix a4 = a2 * a2;
  const CMatrix a6 = a2 * a4;
  const double* b = kPade13;

  CMatrix u_inner = a6 * combine(a2, a4, a6, b[13], b[11], b[9], n, 0.0);
  u_inner += combine(a2, a4, a6, b[7], b[5], b[3], n, b[1]);
  const CMatrix u = a * u_inner;
  CMatrix v = a6 * combine(a2, a4, a6, b[12], b[10], b[8], n, 0.0);
  v += combine(a2, a4, a6, b[6], b[4], b[2], n, b[0]);

  CMatrix r = lu_solve(v - u, v + u);
  for (int k = 0; k < s; ++k) r = r * r;
  if (!r.all_finite()) throw RangeError("expm: result overflowed");
  return r;
}

}  // namespace kfuzzy::numerics
