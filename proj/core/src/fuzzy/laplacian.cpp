#include "kfuzzy/fuzzy/laplacian.hpp"

#include <algorithm>
#include <cmath>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/geometry/laplace.hpp"
#include "kfuzzy/special/bessel.hpp"

namespace kfuzzy::fuzzy {

namespace {

// Adds c·ad_X ad_Y to the superoperator: ad_X ad_Y = XY⊗I − X⊗Yᵀ − Y⊗Xᵀ + I⊗(YX)ᵀ.
void add_double_ad(CMatrix& l, const CMatrix& x, const CMatrix& y, Complex c) {
  const std::size_t n = x.rows();
  const CMatrix xy = x * y, yx = y * x;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) {
        const Complex xik = x(i, k), yik = y(i, k);
        for (std::size_t m = 0; m < n; ++m) {
          Complex v = -(xik * y(m, j) + yik * x(m, j));
          if (j == m) v += xy(i, k);
          if (i == k) v += yx(m, j);
          l(row, k * n + m) += c * v;
        }
      }
    }
}

// Adds c·ad_X = c(X⊗I − I⊗Xᵀ).
void add_ad(CMatrix& l, const CMatrix& x, Complex c) {
  const std::size_t n = x.rows();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t row = i * n + j;
      for (std::size_t k = 0; k < n; ++k) l(row, k * n + j) += c * x(i, k);
      for (std::size_t m = 0; m < n; ++m) l(row, i * n + m) -= c * x(m, j);
    }
}

double low_block_weight(const CMatrix& f) {
  const std::size_t h = f.rows() / 2;
  const double all = f.norm_fro();
  return all > 0.0 ? std::pow(f.block(0, 0, h, h).norm_fro() / all, 2) : 0.0;
}

std::vector<double> representation_direction(const RepOperators& ops) {
  std::vector<double> d;
  double s = 0.0;
  for (const auto& x : ops.xk) {
    d.push_back(x.trace().real());
    s += d.back() * d.back();
  }
  if (s == 0.0) throw DegenerateModeError("mode_compare: spatial generators have zero trace");
  for (double& v : d) v /= std::sqrt(s);
  return d;
}

struct Fitter {
  const GridFunction& f;
  std::vector<double> dir;
  Complex nu;
  int dim;
  std::size_t nt, row;
  double fnorm;

  // Σ_y e^{−iλ d·y} f(t_i, y) for every t row
  std::vector<Complex> plane_projection(double lambda) const {
    std::vector<Complex> g(nt, Complex{});
    for (std::size_t i = 0; i < nt; ++i)
      for (std::size_t j = 0; j < row; ++j) {
        const std::size_t flat = i * row + j;
        const auto idx = f.multi_index(flat);
        double ph = 0.0;
        for (std::size_t k = 0; k < dir.size(); ++k) ph += lambda * dir[k] * f.axes()[k + 1].at(idx[k + 1]);
        g[i] += std::polar(1.0, -ph) * f.values()[flat];
      }
    return g;
  }

  // Overlaps for both kinds at signed λ; {overlap₁, overlap₂, ⟨φ₁,f⟩/‖φ₁‖², ⟨φ₂,f⟩/‖φ₂‖²}
  std::array<Complex, 4> evaluate(double lambda) const {
    const special::BesselOrder order(nu);
    const auto g = plane_projection(lambda);
    Complex ip1 = 0.0, ip2 = 0.0;
    double n1 = 0.0, n2 = 0.0;
    for (std::size_t i = 0; i < nt; ++i) {
      const double t = f.axes()[0].at(i);
      const auto h = special::hankel_both(order, std::abs(lambda) * std::exp(-t));
      const double w = std::exp(0.5 * (1 - dim) * t);
      const Complex r1 = w * h.h1, r2 = w * h.h2;
      ip1 += std::conj(r1) * g[i];
      ip2 += std::conj(r2) * g[i];
      n1 += std::norm(r1);
      n2 += std::norm(r2);
    }
    n1 *= static_cast<double>(row);
    n2 *= static_cast<double>(row);
    return {std::abs(ip1) / (std::sqrt(n1) * fnorm), std::abs(ip2) / (std::sqrt(n2) * fnorm), ip1 / n1, ip2 / n2};
  }
};

}  // namespace

CMatrix fuzzy_laplacian(const RepOperators& ops, const Tolerances& tol) {
  const std::size_t n = ops.size();
  const int d = ops.dim();
  if (d == 2 && n * n > static_cast<std::size_t>(tol.max_superoperator_dim))
    throw MemoryGuardError("fuzzy_laplacian: N² = " + std::to_string(n * n) + " exceeds the superoperator guard " +
                           std::to_string(tol.max_superoperator_dim));
  if (d >= 3 && n > static_cast<std::size_t>(tol.max_truncation_d3))
    throw MemoryGuardError("fuzzy_laplacian: N = " + std::to_string(n) + " exceeds the D ≥ 3 truncation guard " +
                           std::to_string(tol.max_truncation_d3));
  CMatrix l(n * n, n * n);
  add_double_ad(l, ops.x0, ops.x0, -1.0);
  add_ad(l, ops.x0, Complex(0.0, -static_cast<double>(d - 1)));
  for (const auto& x : ops.xk) add_double_ad(l, x, x, 1.0);
  return l;
}

CMatrix apply_fuzzy_laplacian(const RepOperators& ops, const CMatrix& f) {
  using numerics::commutator;
  const CMatrix a0 = commutator(ops.x0, f);
  CMatrix out = Complex(-1.0) * commutator(ops.x0, a0) + Complex(0.0, -static_cast<double>(ops.dim() - 1)) * a0;
  for (const auto& x : ops.xk) out += commutator(x, commutator(x, f));
  return out;
}

CMatrix unvec(std::span<const Complex> v, std::size_t n) {
  if (v.size() != n * n) throw DimensionError("unvec: length is not N²");
  return CMatrix(n, n, std::vector<Complex>(v.begin(), v.end()));
}

FuzzySpectrum solve_fuzzy_spectrum(const RepOperators& ops, const Tolerances& tol) {
  const CMatrix l = fuzzy_laplacian(ops, tol);
  return FuzzySpectrum{ops.size(), ops.dim(), numerics::eig_general(l, {}, tol)};
}

SpectralReport mode_compare(const FuzzySpectrum& spectrum, const CoherentFamily& family, const ModeCompareOptions& opts) {
  const std::size_t n = spectrum.n;
  if (family.carrier_size() != n) throw DimensionError("mode_compare: family carrier differs from the truncation");
  if (family.dim() != spectrum.dim) throw DimensionError("mode_compare: dimension mismatch");
  const auto& eig = spectrum.eigen;
  SpectralReport rep;
  rep.n = n;
  rep.dim = spectrum.dim;
  rep.eigenvalues = eig.values;
  for (const auto& fl : eig.flags) rep.unconverged += fl.converged ? 0 : 1;
  {
    const auto& ops = family.ops();
    const CMatrix c = numerics::commutator(ops.x0, ops.xk[0]) + Complex(0.0, 1.0) * ops.xk[0];
    rep.truncation_deviation = c.block(0, 0, n, n / 2).norm_fro();
  }

  double radius = 0.0;
  for (const auto& v : eig.values) radius = std::max(radius, std::abs(v));
  std::vector<std::pair<double, std::size_t>> ranked;
  for (std::size_t k = 0; k < eig.values.size(); ++k) {
    if (std::abs(eig.values[k]) <= opts.trivial_eigenvalue * std::max(1.0, radius)) continue;
    std::vector<Complex> col(n * n);
    for (std::size_t i = 0; i < n * n; ++i) col[i] = eig.vectors(i, k);
    ranked.emplace_back(low_block_weight(unvec(col, n)), k);
  }
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first > b.first; });
  if (ranked.size() > opts.candidates) ranked.resize(opts.candidates);

  const auto dir = representation_direction(family.ops());
  const double la = std::log(opts.lambda_min), lb = std::log(opts.lambda_max);
  std::vector<double> residuals;
  for (const auto& [weight, k] : ranked) {
    ModeMatch m;
    m.index = k;
    m.eigenvalue = eig.values[k];
    m.mu2 = -m.eigenvalue;
    m.low_block_weight = weight;
    std::vector<Complex> col(n * n);
    for (std::size_t i = 0; i < n * n; ++i) col[i] = eig.vectors(i, k);
    m.samples = dequantize(unvec(col, n), family);

    const auto lap = geometry::laplace_apply(m.samples, m.mu2);
    m.residual = lap.relative(opts.residual_margin);
    {
      const auto a0 = geometry::laplace_apply(m.samples, 0.0);
      const auto shape = m.samples.shape();
      Complex num = 0.0;
      double den = 0.0;
      for (std::size_t i = 0; i < m.samples.size(); ++i) {
        const auto idx = m.samples.multi_index(i);
        bool inside = true;
        for (std::size_t a = 0; a < shape.size(); ++a)
          inside = inside && idx[a] >= opts.residual_margin && idx[a] + opts.residual_margin < shape[a];
        if (!inside) continue;
        num += std::conj(m.samples.values()[i]) * a0.residual.values()[i];
        den += std::norm(m.samples.values()[i]);
      }
      m.mu2_fit = den > 0.0 ? -num / den : Complex{};
    }

    geometry::ClassicalMode cm;
    cm.dim = spectrum.dim;
    cm.mu2 = m.mu2;
    m.nu = cm.nu();
    const double fnorm = std::sqrt([&] {
      double s = 0.0;
      for (const auto& v : m.samples.values()) s += std::norm(v);
      return s;
    }());
    try {
      if (fnorm == 0.0) throw DegenerateModeError("zero field");
      const std::size_t nt = m.samples.axes()[0].count;
      const Fitter fit{m.samples, dir, m.nu, spectrum.dim, nt, m.samples.size() / nt, fnorm};
      struct Best {
        double overlap = -1.0, lambda = 0.0, classical = INFINITY;
        int kind = 1;
        Complex scale;
      } best;
      auto consider = [&](double lambda, const std::array<Complex, 4>& r) {
        for (int kind = 1; kind <= 2; ++kind) {
          const double ov = r[kind - 1].real();
          if (ov > best.overlap + 1e-12) best = {ov, lambda, INFINITY, kind, r[kind + 1]};
        }
      };
      for (int sign : {1, -1})
        for (std::size_t i = 0; i < opts.lambda_points; ++i) {
          const double u = la + (lb - la) * static_cast<double>(i) / static_cast<double>(opts.lambda_points - 1);
          const double lam = sign * std::exp(u);
          consider(lam, fit.evaluate(lam));
        }
      // golden-section refinement in log|λ| around the best grid point, same sign and kind
      {
        const double sign = best.lambda < 0 ? -1.0 : 1.0, du = (lb - la) / static_cast<double>(opts.lambda_points - 1);
        double a = std::max(la, std::log(std::abs(best.lambda)) - du), b = std::min(lb, std::log(std::abs(best.lambda)) + du);
        const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
        const int kind = best.kind;
        auto ov = [&](double u) { return fit.evaluate(sign * std::exp(u))[kind - 1].real(); };
        double c = b - gr * (b - a), d = a + gr * (b - a), fc = ov(c), fd = ov(d);
        for (int it = 0; it < 40; ++it) {
          if (fc > fd) {
            b = d; d = c; fd = fc; c = b - gr * (b - a); fc = ov(c);
          } else {
            a = c; c = d; fc = fd; d = a + gr * (b - a); fd = ov(d);
          }
        }
        const double u = 0.5 * (a + b), lam = sign * std::exp(u);
        const auto r = fit.evaluate(lam);
        if (r[kind - 1].real() > best.overlap) best = {r[kind - 1].real(), lam, INFINITY, kind, r[kind + 1]};
      }
      // tie-break between kinds with equal overlap by the residual of the fitted classical samples
      const auto r = fit.evaluate(best.lambda);
      for (int kind = 1; kind <= 2; ++kind) {
        if (std::abs(r[kind - 1].real() - best.overlap) > 1e-12) continue;
        geometry::ClassicalMode c2 = cm;
        c2.kind = kind;
        c2.lambda.assign(dir.size(), 0.0);
        for (std::size_t a = 0; a < dir.size(); ++a) c2.lambda[a] = best.lambda * dir[a];
        GridFunction g = geometry::classical_mode_grid(c2, m.samples.axes());
        for (auto& v : g.values()) v *= r[kind + 1];
        const double res = geometry::laplace_apply(g, m.mu2).relative(opts.residual_margin);
        if (res < best.classical) {
          best.classical = res;
          best.kind = kind;
          best.scale = r[kind + 1];
        }
      }
      m.overlap = std::clamp(best.overlap, 0.0, 1.0);
      m.lambda = best.lambda;
      m.kind = best.kind;
      m.scale = best.scale;
      m.classical_residual = best.classical;
      m.matched = m.overlap >= opts.overlap_floor;
    } catch (const Error&) {
      m.matched = false;  // order outside the supported range or no usable field
    }
    if (m.matched) residuals.push_back(m.residual);
    rep.best_overlap = std::max(rep.best_overlap, m.overlap);
    rep.modes.push_back(std::move(m));
  }
  if (!residuals.empty()) {
    std::sort(residuals.begin(), residuals.end());
    const std::size_t h = residuals.size() / 2;
    rep.median_residual = residuals.size() % 2 ? residuals[h] : 0.5 * (residuals[h - 1] + residuals[h]);
  } else {
    rep.median_residual = INFINITY;
  }
  return rep;
}

}  // namespace kfuzzy::fuzzy
