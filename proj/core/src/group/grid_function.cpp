#include "kfuzzy/group/grid_function.hpp"

#include <cmath>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/numerics/interpolation.hpp"

namespace kfuzzy::group {

namespace {

std::size_t total_size(const std::vector<GridAxis>& axes) {
  std::size_t n = 1;
  for (const auto& a : axes) n *= a.count;
  return n;
}

void check_axes(const std::vector<GridAxis>& axes) {
  if (axes.size() < 2) throw DimensionError("GridFunction: need a t axis and at least one y axis");
  for (const auto& a : axes)
    if (a.count < 2 || !(a.lo < a.hi)) throw DimensionError("GridFunction: each axis needs lo < hi and 2+ points");
}

double trapezoid_weight(const GridAxis& a, std::size_t i) {
  const double h = a.step();
  return (i == 0 || i + 1 == a.count) ? 0.5 * h : h;
}

}  // namespace

GridFunction::GridFunction(std::vector<GridAxis> axes, std::vector<Complex> values)
    : axes_(std::move(axes)), values_(std::move(values)) {
  check_axes(axes_);
  if (values_.size() != total_size(axes_)) throw DimensionError("GridFunction: value count does not match the grid");
}

GridFunction GridFunction::zeros(std::vector<GridAxis> axes) {
  check_axes(axes);
  const std::size_t n = total_size(axes);
  return GridFunction(std::move(axes), std::vector<Complex>(n));
}

GridFunction GridFunction::sample(std::vector<GridAxis> axes, const std::function<Complex(const SplitElement&)>& f) {
  GridFunction g = zeros(std::move(axes));
  for (std::size_t i = 0; i < g.size(); ++i) g.values_[i] = f(g.point(i));
  return g;
}

std::vector<std::size_t> GridFunction::shape() const {
  std::vector<std::size_t> s;
  for (const auto& a : axes_) s.push_back(a.count);
  return s;
}

std::size_t GridFunction::flat_index(std::span<const std::size_t> idx) const {
  std::size_t f = 0;
  for (std::size_t k = 0; k < axes_.size(); ++k) f = f * axes_[k].count + idx[k];
  return f;
}

std::vector<std::size_t> GridFunction::multi_index(std::size_t flat) const {
  std::vector<std::size_t> idx(axes_.size());
  for (std::size_t k = axes_.size(); k-- > 0;) {
    idx[k] = flat % axes_[k].count;
    flat /= axes_[k].count;
  }
  return idx;
}

SplitElement GridFunction::point(std::size_t flat) const {
  const auto idx = multi_index(flat);
  std::vector<double> y(axes_.size() - 1);
  for (std::size_t k = 1; k < axes_.size(); ++k) y[k - 1] = axes_[k].at(idx[k]);
  return SplitElement(axes_[0].at(idx[0]), std::move(y));
}

std::optional<Complex> GridFunction::interpolate(const SplitElement& p) const {
  if (p.dim() != dim()) throw DimensionError("GridFunction::interpolate: dimension mismatch");
  const std::size_t d = axes_.size();
  std::vector<numerics::CubicStencil> st(d);
  for (std::size_t k = 0; k < d; ++k) {
    const double x = k == 0 ? p.t() : p.y(k - 1);
    const auto s = numerics::cubic_stencil(x, axes_[k].lo, axes_[k].step(), axes_[k].count);
    if (!s) return std::nullopt;
    st[k] = *s;
  }
  Complex acc = 0.0;
  std::vector<std::size_t> idx(d);
  const std::size_t corners = std::size_t{1} << (2 * d);
  for (std::size_t c = 0; c < corners; ++c) {
    double w = 1.0;
    std::size_t rem = c;
    for (std::size_t k = 0; k < d; ++k) {
      const std::size_t o = rem & 3u;
      rem >>= 2;
      idx[k] = st[k].start + o;
      w *= st[k].weights[o];
    }
    acc += w * values_[flat_index(idx)];
  }
  return acc;
}

double GridFunction::max_abs() const {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

double GridFunction::boundary_max_abs() const {
  double m = 0.0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    const auto idx = multi_index(i);
    bool edge = false;
    for (std::size_t k = 0; k < idx.size(); ++k) edge = edge || idx[k] == 0 || idx[k] + 1 == axes_[k].count;
    if (edge) m = std::max(m, std::abs(values_[i]));
  }
  return m;
}

Complex integrate(const GridFunction& f, HaarSide side) {
  const HaarData haar{f.dim()};
  Complex s = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto idx = f.multi_index(i);
    double w = 1.0;
    for (std::size_t k = 0; k < idx.size(); ++k) w *= trapezoid_weight(f.axes()[k], idx[k]);
    if (side == HaarSide::Right) w *= haar.right_density(f.axes()[0].at(idx[0]));
    s += w * f.values()[i];
  }
  return s;
}

Complex integrate(const std::vector<GridAxis>& axes, const std::function<Complex(const SplitElement&)>& f,
                  HaarSide side) {
  return integrate(GridFunction::sample(axes, f), side);
}

double relative_l2(const GridFunction& a, const GridFunction& b) {
  if (a.size() != b.size()) throw DimensionError("relative_l2: grids differ");
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    num += std::norm(a.values()[i] - b.values()[i]);
    den += std::norm(b.values()[i]);
  }
  return den > 0.0 ? std::sqrt(num / den) : std::sqrt(num);
}

}  // namespace kfuzzy::group
