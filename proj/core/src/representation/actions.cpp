#include "kfuzzy/representation/actions.hpp"

#include <cmath>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/numerics/dft.hpp"
#include "kfuzzy/representation/realization.hpp"

namespace kfuzzy::representation {

namespace {

using numerics::CMatrix;

std::vector<std::size_t> shape_of(const std::vector<GridAxis>& axes) {
  std::vector<std::size_t> s;
  for (const auto& a : axes) s.push_back(a.count);
  return s;
}

// Applies the n×n matrix m along one axis of a row-major array.
std::vector<Complex> apply_axis(const std::vector<Complex>& v, const std::vector<std::size_t>& shape, std::size_t axis,
                                const CMatrix& m) {
  std::size_t inner = 1, outer = 1;
  for (std::size_t a = axis + 1; a < shape.size(); ++a) inner *= shape[a];
  for (std::size_t a = 0; a < axis; ++a) outer *= shape[a];
  const std::size_t n = shape[axis];
  std::vector<Complex> out(v.size());
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t in = 0; in < inner; ++in) {
      const std::size_t base = o * n * inner + in;
      for (std::size_t i = 0; i < n; ++i) {
        Complex s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += m(i, j) * v[base + j * inner];
        out[base + i * inner] = s;
      }
    }
  return out;
}

// Interpolation matrix from the samples on `axis` to the points target(x_i); rows of points outside
// the window are zero.
CMatrix resample_matrix(const GridAxis& axis, const std::function<double(double)>& target, bool& outside) {
  const std::size_t n = axis.count;
  const double h = axis.step(), slack = 1e-12 * std::max(1.0, std::abs(axis.hi) + std::abs(axis.lo));
  std::vector<double> xs(n);
  std::vector<bool> in(n);
  for (std::size_t i = 0; i < n; ++i) {
    xs[i] = target(axis.at(i));
    in[i] = xs[i] >= axis.lo - slack && xs[i] <= axis.hi + slack;
    if (!in[i]) {
      outside = true;
      xs[i] = axis.lo;
    }
  }
  CMatrix e = numerics::spectral_eval_matrix(n, axis.lo, h, xs);
  for (std::size_t i = 0; i < n; ++i)
    if (!in[i])
      for (std::size_t j = 0; j < n; ++j) e(i, j) = 0.0;
  return e;
}

void check_dims(const SampledField& f, const SplitElement& g) {
  if (f.axes.empty() || f.axes.size() + 1 != static_cast<std::size_t>(g.dim()))
    throw DimensionError("action: field has D−1 axes and the group element dimension D must match");
}

std::vector<Complex> derivative_axis(const SampledField& f, std::size_t axis) {
  // ∂ = i·(−i∂)
  const CMatrix p = spectral_momentum(f.axes[axis].count, f.axes[axis].step());
  auto d = apply_axis(f.values, shape_of(f.axes), axis, p);
  for (auto& v : d) v *= Complex(0.0, 1.0);
  return d;
}

}  // namespace

SampledField SampledField::sample(std::vector<GridAxis> axes, const std::function<Complex(std::span<const double>)>& f) {
  SampledField s{std::move(axes), {}};
  std::size_t total = 1;
  for (const auto& a : s.axes) total *= a.count;
  s.values.resize(total);
  for (std::size_t i = 0; i < total; ++i) s.values[i] = f(s.point(i));
  return s;
}

std::vector<double> SampledField::point(std::size_t flat) const {
  std::vector<double> x(axes.size());
  for (std::size_t a = axes.size(); a-- > 0;) {
    x[a] = axes[a].at(flat % axes[a].count);
    flat /= axes[a].count;
  }
  return x;
}

double SampledField::norm() const {
  double vol = 1.0, s = 0.0;
  for (const auto& a : axes) vol *= a.step();
  for (const auto& v : values) s += std::norm(v);
  return std::sqrt(s * vol);
}

ActionResult act_l_omega(double omega, const SampledField& f, const SplitElement& g) {
  check_dims(f, g);
  const auto shape = shape_of(f.axes);
  const double emt = std::exp(-g.t());
  bool outside = false;
  std::vector<Complex> v = f.values;
  for (std::size_t a = 0; a < f.axes.size(); ++a) {
    const double ya = g.y(a);
    v = apply_axis(v, shape, a, resample_matrix(f.axes[a], [&](double x) { return emt * x - ya; }, outside));
  }
  const Complex phase = std::polar(1.0, omega * g.t());
  for (auto& z : v) z *= phase;
  return {SampledField{f.axes, std::move(v)}, outside};
}

SampledField generator_l_omega(double omega, const SampledField& f, int mu) {
  if (mu < 0 || static_cast<std::size_t>(mu) > f.axes.size()) throw DimensionError("generator_l_omega: bad index");
  SampledField out{f.axes, std::vector<Complex>(f.size())};
  if (mu == 0) {
    for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = omega * f.values[i];
    for (std::size_t a = 0; a < f.axes.size(); ++a) {
      const auto d = derivative_axis(f, a);
      for (std::size_t i = 0; i < f.size(); ++i) out.values[i] += Complex(0.0, f.point(i)[a]) * d[i];
    }
  } else {
    const auto d = derivative_axis(f, static_cast<std::size_t>(mu - 1));
    for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = Complex(0.0, 1.0) * d[i];
  }
  return out;
}

ActionResult act_l0F(const SampledField& f, const SplitElement& g, L0FWeight weight) {
  check_dims(f, g);
  const auto shape = shape_of(f.axes);
  const double et = std::exp(g.t());
  bool outside = false;
  std::vector<Complex> v = f.values;
  for (std::size_t a = 0; a < f.axes.size(); ++a)
    v = apply_axis(v, shape, a, resample_matrix(f.axes[a], [&](double k) { return et * k; }, outside));
  const double w = weight == L0FWeight::Unitary ? std::exp(0.5 * static_cast<double>(f.axes.size()) * g.t()) : 1.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto k = f.point(i);
    double ph = 0.0;
    for (std::size_t a = 0; a < k.size(); ++a) ph += et * k[a] * g.y(a);
    v[i] *= std::polar(w, ph);
  }
  return {SampledField{f.axes, std::move(v)}, outside};
}

KFunction act_l0F(KFunction f, const SplitElement& g, L0FWeight weight) {
  const double et = std::exp(g.t());
  const double w = weight == L0FWeight::Unitary ? std::exp(0.5 * (g.dim() - 1) * g.t()) : 1.0;
  std::vector<double> y(g.y().begin(), g.y().end());
  return [f = std::move(f), et, w, y](std::span<const double> k) {
    if (k.size() != y.size()) throw DimensionError("act_l0F: k has the wrong dimension");
    std::vector<double> ks(k.size());
    double ph = 0.0;
    for (std::size_t a = 0; a < k.size(); ++a) {
      ks[a] = et * k[a];
      ph += ks[a] * y[a];
    }
    return std::polar(w, ph) * f(ks);
  };
}

SampledField generator_l0F(const SampledField& f, int mu) {
  if (mu < 0 || static_cast<std::size_t>(mu) > f.axes.size()) throw DimensionError("generator_l0F: bad index");
  SampledField out{f.axes, std::vector<Complex>(f.size())};
  if (mu == 0) {
    const double half = 0.5 * static_cast<double>(f.axes.size());
    for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = Complex(0.0, -half) * f.values[i];
    for (std::size_t a = 0; a < f.axes.size(); ++a) {
      const auto d = derivative_axis(f, a);
      for (std::size_t i = 0; i < f.size(); ++i) out.values[i] += Complex(0.0, -f.point(i)[a]) * d[i];
    }
  } else {
    for (std::size_t i = 0; i < f.size(); ++i) out.values[i] = f.point(i)[static_cast<std::size_t>(mu - 1)] * f.values[i];
  }
  return out;
}

std::vector<Complex> ray_restriction(const KFunction& f, std::span<const double> q_nodes, int sign) {
  if (sign != 1 && sign != -1) throw PreconditionError("ray_restriction: sign must be ±1");
  std::vector<Complex> psi(q_nodes.size());
  for (std::size_t j = 0; j < q_nodes.size(); ++j) {
    const double k = sign * std::exp(q_nodes[j]);
    psi[j] = std::exp(0.5 * q_nodes[j]) * f(std::span<const double>(&k, 1));
  }
  return psi;
}

Complex fourier_transform(const SampledField& f, std::span<const double> k) {
  if (k.size() != f.axes.size()) throw DimensionError("fourier_transform: k has the wrong dimension");
  Complex s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    double w = 1.0, ph = 0.0;
    std::size_t rest = i;
    for (std::size_t a = f.axes.size(); a-- > 0;) {
      const std::size_t j = rest % f.axes[a].count;
      rest /= f.axes[a].count;
      const double x = f.axes[a].at(j);
      w *= (j == 0 || j + 1 == f.axes[a].count) ? 0.5 * f.axes[a].step() : f.axes[a].step();
      ph += k[a] * x;
    }
    s += w * std::polar(1.0, ph) * f.values[i];
  }
  return s;
}

double fourier_intertwiner_deviation(double omega, const SampledField& psi, const SplitElement& g,
                                     const std::vector<std::vector<double>>& k_points) {
  const SampledField moved = act_l_omega(omega, psi, g).field;
  const Complex a(static_cast<double>(g.dim() - 1), omega);
  auto knorm = [](std::span<const double> k) {
    double s = 0.0;
    for (double v : k) s += v * v;
    return std::sqrt(s);
  };
  KFunction phi = [&psi, a, knorm](std::span<const double> k) { return std::pow(knorm(k), a) * fourier_transform(psi, k); };
  const KFunction acted = act_l0F(phi, g, L0FWeight::Plain);
  double worst = 0.0, scale = 0.0;
  for (const auto& k : k_points) {
    const double r = knorm(k);
    if (r == 0.0) throw PreconditionError("fourier_intertwiner_deviation: k = 0 is excluded");
    const Complex lhs = fourier_transform(moved, k);
    const Complex rhs = std::pow(r, -a) * acted(k);
    worst = std::max(worst, std::abs(lhs - rhs));
    scale = std::max(scale, std::abs(lhs));
  }
  return scale > 0.0 ? worst / scale : worst;
}

}  // namespace kfuzzy::representation
