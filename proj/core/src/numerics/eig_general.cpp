#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "kfuzzy/numerics/linalg.hpp"

namespace kfuzzy::numerics {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double abs1(Complex z) { return std::abs(z.real()) + std::abs(z.imag()); }

// Diagonal similarity D⁻¹AD with power-of-two entries that equalizes row and column norms.
std::vector<double> balance(CMatrix& a) {
  const std::size_t n = a.rows();
  std::vector<double> d(n, 1.0);
  bool done = false;
  for (int pass = 0; pass < 200 && !done; ++pass) {
    done = true;
    for (std::size_t i = 0; i < n; ++i) {
      double c = 0.0, r = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        c += abs1(a(j, i));
        r += abs1(a(i, j));
      }
      if (c == 0.0 || r == 0.0) continue;
      const double s = c + r;
      double f = 1.0, g = r / 2.0;
      while (c < g) {
        f *= 2.0;
        c *= 4.0;
      }
      g = r * 2.0;
      while (c >= g) {
        f /= 2.0;
        c /= 4.0;
      }
      if ((c + r) / f < 0.95 * s) {
        done = false;
        d[i] *= f;
        for (std::size_t j = 0; j < n; ++j) a(i, j) /= f;
        for (std::size_t j = 0; j < n; ++j) a(j, i) *= f;
      }
    }
  }
  return d;
}

// Householder reduction to upper Hessenberg form. zt holds the transposed accumulated unitary.
void hessenberg(CMatrix& h, CMatrix& zt, bool accumulate) {
  const std::size_t n = h.rows();
  CVector v(n), w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
    const double tail = xnorm2 - std::norm(h(k + 1, k));
    if (tail <= 0.0) continue;
    const double xnorm = std::sqrt(xnorm2);
    const Complex x0 = h(k + 1, k);
    const Complex phase = std::abs(x0) > 0.0 ? x0 / std::abs(x0) : Complex(1.0);
    const Complex alpha = -phase * xnorm;
    std::fill(v.begin(), v.end(), Complex(0.0));
    for (std::size_t i = k + 1; i < n; ++i) v[i] = h(i, k);
    v[k + 1] -= alpha;
    double vn2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) vn2 += std::norm(v[i]);
    const double vn = std::sqrt(vn2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vn;

    // H ← (I − 2vv*) H : rows k+1.., columns k..
    std::fill(w.begin(), w.end(), Complex(0.0));
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex vi = std::conj(v[i]);
      const Complex* hi = h.data() + i * n;
      for (std::size_t j = k; j < n; ++j) w[j] += vi * hi[j];
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex f = 2.0 * v[i];
      Complex* hi = h.data() + i * n;
      for (std::size_t j = k; j < n; ++j) hi[j] -= f * w[j];
    }
    // H ← H (I − 2vv*) : all rows, columns k+1..
    for (std::size_t i = 0; i < n; ++i) {
      Complex* hi = h.data() + i * n;
      Complex s = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) s += hi[j] * v[j];
      s *= 2.0;
      for (std::size_t j = k + 1; j < n; ++j) hi[j] -= s * std::conj(v[j]);
    }
    h(k + 1, k) = alpha;
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
    if (accumulate) {
      // Z ← Z (I − 2vv*), i.e. Zᵀ ← (I − 2 v̄ vᵀ) Zᵀ on rows k+1..
      std::fill(w.begin(), w.end(), Complex(0.0));
      for (std::size_t i = k + 1; i < n; ++i) {
        const Complex vi = v[i];
        const Complex* zi = zt.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) w[j] += vi * zi[j];
      }
      for (std::size_t i = k + 1; i < n; ++i) {
        const Complex f = 2.0 * std::conj(v[i]);
        Complex* zi = zt.data() + i * n;
        for (std::size_t j = 0; j < n; ++j) zi[j] -= f * w[j];
      }
    }
  }
}

struct Rotation {
  Complex w11, w12, w21, w22;  // W with W [p; q] = [ρ; 0]
};

Rotation make_rotation(Complex p, Complex q) {
  const double rho = std::hypot(std::abs(p), std::abs(q));
  if (rho == 0.0) return {1.0, 0.0, 0.0, 1.0};
  return {std::conj(p) / rho, std::conj(q) / rho, -q / rho, p / rho};
}

// rows i, i+1 ← W [row i; row i+1] over columns [c0, n)
void rotate_rows(CMatrix& h, std::size_t i, std::size_t c0, const Rotation& r) {
  const std::size_t n = h.cols();
  Complex* a = h.data() + i * n;
  Complex* b = a + n;
  for (std::size_t j = c0; j < n; ++j) {
    const Complex x = a[j], y = b[j];
    a[j] = r.w11 * x + r.w12 * y;
    b[j] = r.w21 * x + r.w22 * y;
  }
}

// columns i, i+1 ← [col i, col i+1] W* over rows [0, r1]
void rotate_cols(CMatrix& h, std::size_t i, std::size_t r1, const Rotation& r) {
  const std::size_t n = h.cols();
  const Complex c11 = std::conj(r.w11), c12 = std::conj(r.w12), c21 = std::conj(r.w21), c22 = std::conj(r.w22);
  for (std::size_t k = 0; k <= r1; ++k) {
    Complex* row = h.data() + k * n + i;
    const Complex x = row[0], y = row[1];
    row[0] = x * c11 + y * c12;
    row[1] = x * c21 + y * c22;
  }
}

// Z ← Z W*, applied to the transposed storage.
void rotate_z(CMatrix& zt, std::size_t i, const Rotation& r) {
  const std::size_t n = zt.cols();
  const Complex c11 = std::conj(r.w11), c12 = std::conj(r.w12), c21 = std::conj(r.w21), c22 = std::conj(r.w22);
  Complex* a = zt.data() + i * n;
  Complex* b = a + n;
  for (std::size_t j = 0; j < n; ++j) {
    const Complex x = a[j], y = b[j];
    a[j] = c11 * x + c12 * y;
    b[j] = c21 * x + c22 * y;
  }
}

Complex wilkinson_shift(const CMatrix& t, std::size_t iu) {
  const Complex a = t(iu - 1, iu - 1), b = t(iu - 1, iu), c = t(iu, iu - 1), d = t(iu, iu);
  const Complex half_tr = 0.5 * (a + d);
  const Complex disc = std::sqrt(0.25 * (a - d) * (a - d) + b * c);
  const Complex l1 = half_tr + disc, l2 = half_tr - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

bool negligible(const CMatrix& t, std::size_t i, double floor_abs) {
  const double sub = abs1(t(i, i - 1));
  const double diag = abs1(t(i, i)) + abs1(t(i - 1, i - 1));
  if (sub <= kEps * diag) return true;
  return sub <= floor_abs;
}

// Reduces Hessenberg h to upper triangular Schur form in place.
void schur(CMatrix& t, CMatrix& zt, bool accumulate, const Tolerances& tol) {
  const std::size_t n = t.rows();
  if (n <= 1) return;
  const double floor_abs = std::max(std::numeric_limits<double>::min(), tol.qr_deflation * t.norm_max());
  const long max_iter = static_cast<long>(tol.qr_iterations_per_dim) * static_cast<long>(n);
  std::size_t iu = n - 1;
  long total = 0;
  int iter = 0;
  while (true) {
    while (iu > 0) {
      if (negligible(t, iu, floor_abs)) {
        t(iu, iu - 1) = 0.0;
        --iu;
        iter = 0;
      } else {
        break;
      }
    }
    if (iu == 0) break;
    ++iter;
    if (++total > max_iter) {
      CVector done;
      for (std::size_t i = iu + 1; i < n; ++i) done.push_back(t(i, i));
      throw EigenConvergenceError("eig_general: QR iteration cap reached with " + std::to_string(done.size()) +
                                      " of " + std::to_string(n) + " eigenvalues converged",
                                  done);
    }
    std::size_t il = iu - 1;
    while (il > 0 && !negligible(t, il, floor_abs)) --il;
    if (il > 0) t(il, il - 1) = 0.0;

    Complex shift;
    if (iter == 10 || iter == 20) {
      shift = std::abs(t(iu, iu - 1).real()) + (iu >= 2 ? std::abs(t(iu - 1, iu - 2).real()) : 0.0);
    } else {
      shift = wilkinson_shift(t, iu);
    }

    Rotation r = make_rotation(t(il, il) - shift, t(il + 1, il));
    rotate_rows(t, il, il, r);
    rotate_cols(t, il, std::min(il + 2, iu), r);
    if (accumulate) rotate_z(zt, il, r);
    for (std::size_t i = il + 1; i < iu; ++i) {
      r = make_rotation(t(i, i - 1), t(i + 1, i - 1));
      rotate_rows(t, i, i - 1, r);
      t(i + 1, i - 1) = 0.0;
      rotate_cols(t, i, std::min(i + 2, iu), r);
      if (accumulate) rotate_z(zt, i, r);
    }
  }
}

// Right eigenvector of upper-triangular t for diagonal index k (entries k+1.. are zero).
void triangular_right(const CMatrix& t, std::size_t k, double smin, CVector& x) {
  const Complex lambda = t(k, k);
  std::fill(x.begin(), x.end(), Complex(0.0));
  x[k] = 1.0;
  for (std::size_t i = k; i-- > 0;) {
    const Complex* ti = t.data() + i * t.cols();
    Complex s = 0.0;
    for (std::size_t j = i + 1; j <= k; ++j) s += ti[j] * x[j];
    Complex d = ti[i] - lambda;
    if (std::abs(d) < smin) d = smin;
    x[i] = -s / d;
    if (std::abs(x[i]) > 1e150) {
      for (std::size_t j = i; j <= k; ++j) x[j] *= 1e-150;
    }
  }
}

// Left eigenvector y (y* t = λ y*) for diagonal index k; entries below k are zero.
void triangular_left(const CMatrix& t, std::size_t k, double smin, CVector& y, CVector& acc) {
  const std::size_t n = t.rows();
  const Complex lambda = t(k, k);
  std::fill(y.begin(), y.end(), Complex(0.0));
  std::fill(acc.begin(), acc.end(), Complex(0.0));
  for (std::size_t j = k; j < n; ++j) {
    if (j == k) {
      y[j] = 1.0;
    } else {
      Complex d = std::conj(t(j, j) - lambda);
      if (std::abs(d) < smin) d = smin;
      y[j] = -acc[j] / d;
    }
    const Complex* tj = t.data() + j * n;
    for (std::size_t i = j + 1; i < n; ++i) acc[i] += std::conj(tj[i]) * y[j];
    if (std::abs(y[j]) > 1e150) {
      for (std::size_t i = k; i <= j; ++i) y[i] *= 1e-150;
      for (std::size_t i = j + 1; i < n; ++i) acc[i] *= 1e-150;
    }
  }
}

// out = Z x using the transposed storage, for x supported on [lo, hi].
void z_times(const CMatrix& zt, const CVector& x, std::size_t lo, std::size_t hi, CVector& out) {
  const std::size_t n = zt.cols();
  std::fill(out.begin(), out.end(), Complex(0.0));
  for (std::size_t j = lo; j <= hi; ++j) {
    const Complex xj = x[j];
    if (xj == Complex(0.0)) continue;
    const Complex* zj = zt.data() + j * n;
    for (std::size_t r = 0; r < n; ++r) out[r] += xj * zj[r];
  }
}

}  // namespace

GeneralEigen eig_general(const CMatrix& m, const GeneralEigenOptions& opts, const Tolerances& tol) {
  if (!m.is_square()) throw DimensionError("eig_general: matrix must be square");
  if (!m.all_finite()) throw InputError("eig_general: non-finite entry");
  const std::size_t n = m.rows();
  GeneralEigen out;
  if (n == 0) return out;

  CMatrix t = m;
  std::vector<double> d(n, 1.0);
  if (opts.balance) d = balance(t);
  const bool accumulate = opts.compute_vectors || opts.compute_condition;
  CMatrix zt = accumulate ? CMatrix::identity(n) : CMatrix();
  hessenberg(t, zt, accumulate);
  schur(t, zt, accumulate, tol);

  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.values[i] = t(i, i);
  out.flags.assign(n, EigenFlags{});
  if (!accumulate) return out;

  const double smin = std::max(kEps * t.norm_max(), std::numeric_limits<double>::min());
  const double mnorm = std::max(m.norm1(), std::numeric_limits<double>::min());
  out.vectors = CMatrix(n, n);
  out.residuals.assign(n, 0.0);
  CVector x(n), v(n), acc(n), w(n);
  for (std::size_t k = 0; k < n; ++k) {
    triangular_right(t, k, smin, x);
    z_times(zt, x, 0, k, v);
    for (std::size_t i = 0; i < n; ++i) v[i] *= d[i];
    const double vn = norm2(v);
    for (auto& z : v) z /= vn;
    out.vectors.set_col(k, v);

    const CVector mv = m * std::span<const Complex>(v);
    double r2 = 0.0;
    for (std::size_t i = 0; i < n; ++i) r2 += std::norm(mv[i] - out.values[k] * v[i]);
    out.residuals[k] = std::sqrt(r2) / mnorm;
    EigenFlags& f = out.flags[k];
    f.converged = out.residuals[k] <= tol.eig_residual;

    if (opts.compute_condition) {
      triangular_left(t, k, smin, x, acc);
      z_times(zt, x, k, n - 1, w);
      for (std::size_t i = 0; i < n; ++i) w[i] /= d[i];
      const double wn = norm2(w);
      const double overlap = std::abs(dot(w, v)) / wn;
      f.condition = overlap > 0.0 ? 1.0 / overlap : std::numeric_limits<double>::infinity();
      f.ill_conditioned = f.condition > tol.ill_conditioned;
      f.defective = f.condition > tol.defective;
    } else {
      f.condition = std::numeric_limits<double>::quiet_NaN();
    }
  }
  return out;
}

}  // namespace kfuzzy::numerics
