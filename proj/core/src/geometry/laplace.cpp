#include "kfuzzy/geometry/laplace.hpp"

#include <cmath>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/numerics/finite_diff.hpp"

namespace kfuzzy::geometry {

namespace {

bool interior(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& shape, std::size_t margin) {
  for (std::size_t a = 0; a < shape.size(); ++a)
    if (idx[a] < margin || idx[a] + margin >= shape[a]) return false;
  return true;
}

void check_mode(const ClassicalMode& m) {
  if (m.dim < 2) throw DimensionError("ClassicalMode: D must be at least 2");
  if (m.lambda.size() != static_cast<std::size_t>(m.dim - 1))
    throw DimensionError("ClassicalMode: λ must have D−1 components");
  if (m.kind != 1 && m.kind != 2) throw InputError("ClassicalMode: kind must be 1 or 2");
  if (!(m.lambda_norm() > 0.0)) throw DegenerateModeError("ClassicalMode: λ = 0, the Hankel factor is singular");
}

}  // namespace

double LaplaceResult::relative(std::size_t margin) const {
  const auto shape = residual.shape();
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < residual.size(); ++i) {
    if (!interior(residual.multi_index(i), shape, margin)) continue;
    num = std::max(num, std::abs(residual.values()[i]));
    den = std::max(den, scale.values()[i].real());
  }
  if (den == 0.0) return num == 0.0 ? 0.0 : INFINITY;
  return num / den;
}

double LaplaceResult::max_abs(std::size_t margin) const {
  const auto shape = residual.shape();
  double m = 0.0;
  for (std::size_t i = 0; i < residual.size(); ++i)
    if (interior(residual.multi_index(i), shape, margin)) m = std::max(m, std::abs(residual.values()[i]));
  return m;
}

LaplaceResult laplace_apply(const GridFunction& f, Complex mu2, const LaplaceOptions& opts) {
  const auto shape = f.shape();
  const auto& axes = f.axes();
  const std::size_t d = shape.size();
  const double sign = opts.spatial == SpatialFactor::ExpMinus2t ? -2.0 : 2.0;

  const auto ft = numerics::fin_diff_axis(f.values(), shape, 0, 1, opts.accuracy, axes[0].step());
  const auto ftt = numerics::fin_diff_axis(f.values(), shape, 0, 2, opts.accuracy, axes[0].step());
  std::vector<Complex> lap(f.size(), 0.0);
  std::vector<double> lap_abs(f.size(), 0.0);
  for (std::size_t a = 1; a < d; ++a) {
    const auto fyy = numerics::fin_diff_axis(f.values(), shape, a, 2, opts.accuracy, axes[a].step());
    for (std::size_t i = 0; i < f.size(); ++i) {
      lap[i] += fyy[i];
      lap_abs[i] += std::abs(fyy[i]);
    }
  }

  std::size_t row = f.size() / shape[0];
  GridFunction res = GridFunction::zeros(axes), scale = GridFunction::zeros(axes);
  const double dm1 = static_cast<double>(d - 1);
  for (std::size_t it = 0; it < shape[0]; ++it) {
    const double factor = std::exp(sign * axes[0].at(it));
    for (std::size_t j = 0; j < row; ++j) {
      const std::size_t i = it * row + j;
      const Complex fi = f.values()[i];
      res.values()[i] = ftt[i] + dm1 * ft[i] + mu2 * fi - factor * lap[i];
      scale.values()[i] = std::abs(ftt[i]) + dm1 * std::abs(ft[i]) + std::abs(mu2 * fi) + factor * lap_abs[i];
    }
  }
  return LaplaceResult{std::move(res), std::move(scale)};
}

Complex ClassicalMode::nu() const {
  const double h = 0.5 * (dim - 1);
  return std::sqrt(Complex(h * h) - mu2);
}

double ClassicalMode::lambda_norm() const {
  double s = 0.0;
  for (double l : lambda) s += l * l;
  return std::sqrt(s);
}

Complex ClassicalMode::mu2_for_order(int dim, Complex nu) {
  const double h = 0.5 * (dim - 1);
  return h * h - nu * nu;
}

Complex classical_mode(const ClassicalMode& m, const SplitElement& p, const special::HankelOptions& opts) {
  check_mode(m);
  if (p.dim() != m.dim) throw DimensionError("classical_mode: point dimension mismatch");
  const special::BesselOrder order(m.nu());
  double phase = 0.0;
  for (std::size_t k = 0; k < m.lambda.size(); ++k) phase += m.lambda[k] * p.y(k);
  const Complex h = special::hankel(m.kind, order, m.lambda_norm() * std::exp(-p.t()), opts);
  return std::polar(std::exp(0.5 * (1 - m.dim) * p.t()), phase) * h;
}

GridFunction classical_mode_grid(const ClassicalMode& m, const std::vector<GridAxis>& axes,
                                 const special::HankelOptions& opts) {
  check_mode(m);
  if (axes.size() != static_cast<std::size_t>(m.dim)) throw DimensionError("classical_mode_grid: axis count mismatch");
  const special::BesselOrder order(m.nu());
  GridFunction g = GridFunction::zeros(axes);
  const std::size_t nt = axes[0].count, row = g.size() / nt;
  const double lam = m.lambda_norm();
  for (std::size_t it = 0; it < nt; ++it) {
    const double t = axes[0].at(it);
    const Complex radial = std::exp(0.5 * (1 - m.dim) * t) * special::hankel(m.kind, order, lam * std::exp(-t), opts);
    for (std::size_t j = 0; j < row; ++j) {
      const std::size_t i = it * row + j;
      const auto idx = g.multi_index(i);
      double phase = 0.0;
      for (std::size_t k = 0; k < m.lambda.size(); ++k) phase += m.lambda[k] * axes[k + 1].at(idx[k + 1]);
      g.values()[i] = std::polar(1.0, phase) * radial;
    }
  }
  return g;
}

}  // namespace kfuzzy::geometry
