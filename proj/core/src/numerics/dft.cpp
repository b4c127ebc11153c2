#include "kfuzzy/numerics/dft.hpp"

#include <cmath>
#include <numbers>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::numerics {

namespace {

bool is_pow2(std::size_t n) { return n && !(n & (n - 1)); }

void fft_pow2(CVector& a, double sign) {
  const std::size_t n = a.size();
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
    std::vector<Complex> tw(len / 2);
    for (std::size_t k = 0; k < len / 2; ++k) tw[k] = std::polar(1.0, ang * static_cast<double>(k));
    for (std::size_t i = 0; i < n; i += len)
      for (std::size_t k = 0; k < len / 2; ++k) {
        const Complex u = a[i + k], v = a[i + k + len / 2] * tw[k];
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
  }
}

}  // namespace

CVector dft(std::span<const Complex> v, Direction dir) {
  const std::size_t n = v.size();
  if (n == 0) throw DimensionError("dft: empty input");
  const double sign = dir == Direction::Forward ? -1.0 : 1.0;
  const double scale = 1.0 / std::sqrt(static_cast<double>(n));
  CVector out;
  if (is_pow2(n)) {
    out.assign(v.begin(), v.end());
    fft_pow2(out, sign);
  } else {
    std::vector<Complex> roots(n);
    for (std::size_t k = 0; k < n; ++k)
      roots[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n));
    out.assign(n, Complex(0.0));
    for (std::size_t k = 0; k < n; ++k) {
      Complex s = 0.0;
      for (std::size_t j = 0; j < n; ++j) s += v[j] * roots[(j * k) % n];
      out[k] = s;
    }
  }
  for (auto& z : out) z *= scale;
  return out;
}

std::vector<double> wavenumbers(std::size_t n, double h) {
  std::vector<double> k(n);
  const double base = 2.0 * std::numbers::pi / (static_cast<double>(n) * h);
  for (std::size_t m = 0; m < n; ++m) {
    const long mm = m < (n + 1) / 2 ? static_cast<long>(m) : static_cast<long>(m) - static_cast<long>(n);
    k[m] = base * static_cast<double>(mm);
  }
  return k;
}

CVector spectral_shift(std::span<const Complex> f, double h, double s) {
  CVector c = dft(f, Direction::Forward);
  const auto k = wavenumbers(f.size(), h);
  for (std::size_t m = 0; m < c.size(); ++m) c[m] *= std::polar(1.0, k[m] * s);
  return dft(c, Direction::Inverse);
}

CMatrix spectral_eval_matrix(std::size_t n, double x0, double h, std::span<const double> xs) {
  // E(p, j) = (1/n) Σ_m e^{i k_m (x_p − x_j)} with the Nyquist term taken as cos.
  CMatrix e(xs.size(), n);
  const double base = 2.0 * std::numbers::pi / (static_cast<double>(n) * h);
  const bool even = n % 2 == 0;
  const long mmax = even ? static_cast<long>(n / 2) - 1 : static_cast<long>(n / 2);
  for (std::size_t p = 0; p < xs.size(); ++p) {
    for (std::size_t j = 0; j < n; ++j) {
      const double d = xs[p] - (x0 + h * static_cast<double>(j));
      // Dirichlet kernel Σ_{m=−mmax}^{mmax} e^{i m θ}
      const double theta = base * d;
      const double den = std::sin(0.5 * theta);
      double s;
      if (std::abs(den) > 1e-6) {
        s = std::sin((static_cast<double>(mmax) + 0.5) * theta) / den;
      } else {
        s = 1.0;
        for (long m = 1; m <= mmax; ++m) s += 2.0 * std::cos(theta * static_cast<double>(m));
      }
      if (even) s += std::cos(theta * static_cast<double>(n / 2));
      e(p, j) = s / static_cast<double>(n);
    }
  }
  return e;
}

CVector spectral_eval(std::span<const Complex> f, double x0, double h, std::span<const double> xs) {
  const CMatrix e = spectral_eval_matrix(f.size(), x0, h, xs);
  return e * f;
}

}  // namespace kfuzzy::numerics
