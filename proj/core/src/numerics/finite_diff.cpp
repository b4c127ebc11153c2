#include "kfuzzy/numerics/finite_diff.hpp"

#include <string>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::numerics {

std::vector<double> fd_weights(double x0, std::span<const double> x, int order) {
  const int n = static_cast<int>(x.size()) - 1;
  if (n < order) throw DimensionError("fd_weights: too few points for the derivative order");
  // c[j][k]: weight of point j for derivative k
  std::vector<std::vector<double>> c(x.size(), std::vector<double>(order + 1, 0.0));
  double c1 = 1.0, c4 = x[0] - x0;
  c[0][0] = 1.0;
  for (int i = 1; i <= n; ++i) {
    const int mn = std::min(i, order);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = x[i] - x0;
    for (int j = 0; j < i; ++j) {
      const double c3 = x[i] - x[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k) c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  std::vector<double> w(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) w[j] = c[j][order];
  return w;
}

namespace {

struct Stencils {
  int half = 0;                               // central stencil half width
  std::vector<double> central;                // offsets −half..half
  std::vector<std::vector<double>> forward;   // forward[i]: stencil at sample i over samples 0..width−1
  std::vector<std::vector<double>> backward;  // backward[i]: stencil at sample n−1−i over the last width samples
  int width = 0;                              // one-sided stencil width
};

Stencils make_stencils(int order, int accuracy, double h) {
  if (order != 1 && order != 2) throw PreconditionError("fin_diff: order must be 1 or 2");
  if (accuracy != 2 && accuracy != 4) throw PreconditionError("fin_diff: accuracy must be 2 or 4");
  if (!(h > 0.0)) throw PreconditionError("fin_diff: step must be positive");
  Stencils s;
  s.half = accuracy / 2;
  std::vector<double> pts;
  for (int k = -s.half; k <= s.half; ++k) pts.push_back(k * h);
  s.central = fd_weights(0.0, pts, order);
  s.width = order + accuracy;
  std::vector<double> fpts;
  for (int k = 0; k < s.width; ++k) fpts.push_back(k * h);
  for (int i = 0; i < s.half; ++i) {
    s.forward.push_back(fd_weights(i * h, fpts, order));
    s.backward.push_back(fd_weights((s.width - 1 - i) * h, fpts, order));
  }
  return s;
}

template <typename T>
void apply_strided(const T* f, T* out, std::size_t n, std::size_t stride, const Stencils& s) {
  const int half = s.half;
  const auto ni = static_cast<long>(n);
  for (long i = half; i < ni - half; ++i) {
    T acc{};
    for (int k = -half; k <= half; ++k) acc += s.central[k + half] * f[(i + k) * stride];
    out[i * stride] = acc;
  }
  for (int i = 0; i < half; ++i) {
    T lo{}, hi{};
    const std::size_t tail = n - static_cast<std::size_t>(s.width);
    for (int k = 0; k < s.width; ++k) {
      lo += s.forward[i][k] * f[static_cast<std::size_t>(k) * stride];
      hi += s.backward[i][k] * f[(tail + k) * stride];
    }
    out[i * stride] = lo;
    out[(n - 1 - i) * stride] = hi;
  }
}

template <typename T>
std::vector<T> fin_diff_impl(std::span<const T> f, int order, int accuracy, double h) {
  const Stencils s = make_stencils(order, accuracy, h);
  if (f.size() < static_cast<std::size_t>(s.width))
    throw DimensionError("fin_diff: need at least " + std::to_string(s.width) + " samples");
  std::vector<T> out(f.size());
  apply_strided(f.data(), out.data(), f.size(), 1, s);
  return out;
}

}  // namespace

std::vector<Complex> fin_diff(std::span<const Complex> f, int order, int accuracy, double h) {
  return fin_diff_impl(f, order, accuracy, h);
}

std::vector<double> fin_diff(std::span<const double> f, int order, int accuracy, double h) {
  return fin_diff_impl(f, order, accuracy, h);
}

std::vector<Complex> fin_diff_axis(std::span<const Complex> f, std::span<const std::size_t> shape, std::size_t axis,
                                   int order, int accuracy, double h) {
  if (axis >= shape.size()) throw DimensionError("fin_diff_axis: axis out of range");
  std::size_t total = 1;
  for (auto d : shape) total *= d;
  if (total != f.size()) throw DimensionError("fin_diff_axis: shape does not match the sample count");
  const Stencils s = make_stencils(order, accuracy, h);
  const std::size_t n = shape[axis];
  if (n < static_cast<std::size_t>(s.width))
    throw DimensionError("fin_diff_axis: need at least " + std::to_string(s.width) + " samples along the axis");
  std::size_t stride = 1;
  for (std::size_t k = axis + 1; k < shape.size(); ++k) stride *= shape[k];
  const std::size_t outer = total / (n * stride);
  std::vector<Complex> out(total);
  for (std::size_t o = 0; o < outer; ++o)
    for (std::size_t in = 0; in < stride; ++in) {
      const std::size_t base = o * n * stride + in;
      apply_strided(f.data() + base, out.data() + base, n, stride, s);
    }
  return out;
}

}  // namespace kfuzzy::numerics
