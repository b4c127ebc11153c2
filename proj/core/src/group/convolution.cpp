#include "kfuzzy/group/convolution.hpp"

#include <cmath>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/numerics/interpolation.hpp"

namespace kfuzzy::group {

namespace {

bool same_grid(const GridFunction& a, const GridFunction& b) {
  if (a.dim() != b.dim()) return false;
  for (int k = 0; k < a.dim(); ++k) {
    const auto &x = a.axes()[k], &y = b.axes()[k];
    if (x.lo != y.lo || x.hi != y.hi || x.count != y.count) return false;
  }
  return true;
}

double weight(const GridAxis& a, std::size_t i) { return (i == 0 || i + 1 == a.count) ? 0.5 * a.step() : a.step(); }

double edge_ratio(const GridFunction& f) {
  const double m = f.max_abs();
  return m > 0.0 ? f.boundary_max_abs() / m : 0.0;
}

// Samples of f2 along one t position τ (cubic in t when τ is off-grid), as a y-profile.
bool t_slice(const GridFunction& f, double tau, std::vector<Complex>& out) {
  const GridAxis& ta = f.axes()[0];
  const std::size_t ny = f.axes()[1].count;
  const double u = (tau - ta.lo) / ta.step();
  const double ur = std::round(u);
  if (std::abs(u - ur) < 1e-9) {
    if (ur < 0 || ur > static_cast<double>(ta.count - 1)) return false;
    const auto r = static_cast<std::size_t>(ur);
    for (std::size_t j = 0; j < ny; ++j) out[j] = f.values()[r * ny + j];
    return true;
  }
  const auto st = numerics::cubic_stencil(tau, ta.lo, ta.step(), ta.count);
  if (!st) return false;
  std::fill(out.begin(), out.end(), Complex(0.0));
  for (int o = 0; o < 4; ++o) {
    const std::size_t r = st->start + o;
    for (std::size_t j = 0; j < ny; ++j) out[j] += st->weights[o] * f.values()[r * ny + j];
  }
  return true;
}

ConvolutionResult convolve_2d(const GridFunction& f1, const GridFunction& f2) {
  const GridAxis &ta = f1.axes()[0], &ya = f1.axes()[1];
  const std::size_t nt = ta.count, ny = ya.count;
  GridFunction out = GridFunction::zeros(f1.axes());
  std::vector<Complex> slice(ny);
  std::vector<numerics::CubicStencil> stencils(ny);
  std::vector<char> valid(ny);
  for (std::size_t i = 0; i < nt; ++i) {
    const double t = ta.at(i);
    for (std::size_t a = 0; a < nt; ++a) {
      const double tp = ta.at(a);
      if (!t_slice(f2, t - tp, slice)) continue;
      const double s = std::exp(tp - t);
      const double wa = weight(ta, a);
      for (std::size_t b = 0; b < ny; ++b) {
        const Complex f1v = f1.values()[a * ny + b];
        if (f1v == Complex(0.0)) continue;
        const Complex coef = wa * weight(ya, b) * f1v;
        const double yb = ya.at(b);
        for (std::size_t j = 0; j < ny; ++j) {
          const auto st = numerics::cubic_stencil(ya.at(j) - s * yb, ya.lo, ya.step(), ny);
          if (!st) continue;
          Complex v = 0.0;
          for (int o = 0; o < 4; ++o) v += st->weights[o] * slice[st->start + o];
          out.values()[i * ny + j] += coef * v;
        }
      }
    }
  }
  return {std::move(out), false, 0.0};
}

ConvolutionResult convolve_generic(const GridFunction& f1, const GridFunction& f2) {
  GridFunction out = GridFunction::zeros(f1.axes());
  for (std::size_t o = 0; o < out.size(); ++o) {
    const SplitElement g = out.point(o);
    Complex acc = 0.0;
    for (std::size_t p = 0; p < f1.size(); ++p) {
      const Complex f1v = f1.values()[p];
      if (f1v == Complex(0.0)) continue;
      const auto idx = f1.multi_index(p);
      double w = 1.0;
      for (std::size_t k = 0; k < idx.size(); ++k) w *= weight(f1.axes()[k], idx[k]);
      const auto v = f2.interpolate(multiply_split(inverse(f1.point(p)), g));
      if (v) acc += w * f1v * *v;
    }
    out.values()[o] = acc;
  }
  return {std::move(out), false, 0.0};
}

}  // namespace

ConvolutionResult convolve(const GridFunction& f1, const GridFunction& f2, const ConvolutionOptions& opts,
                           const Tolerances& tol) {
  if (!same_grid(f1, f2)) throw DimensionError("convolve: inputs must share a grid");
  if (f1.dim() != 2 && !opts.allow_higher_dim)
    throw DimensionError("convolve: D > 2 requires allow_higher_dim");
  ConvolutionResult r = f1.dim() == 2 ? convolve_2d(f1, f2) : convolve_generic(f1, f2);
  r.edge_ratio = std::max(edge_ratio(f1), edge_ratio(f2));
  r.truncation_warning = r.edge_ratio > tol.edge_mass;
  return r;
}

GridFunction involution(const GridFunction& f) {
  GridFunction out = GridFunction::zeros(f.axes());
  const int d = f.dim();
  for (std::size_t i = 0; i < out.size(); ++i) {
    const SplitElement g = out.point(i);
    const auto v = f.interpolate(inverse(g));
    if (v) out.values()[i] = std::conj(*v) * std::exp((d - 1) * g.t());
  }
  return out;
}

}  // namespace kfuzzy::group
