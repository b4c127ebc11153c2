#include "kfuzzy/numerics/interpolation.hpp"

#include <cmath>

namespace kfuzzy::numerics {

std::optional<CubicStencil> cubic_stencil(double x, double lo, double h, std::size_t n, double slack) {
  if (n < 4) return std::nullopt;
  const double u = (x - lo) / h;
  const double last = static_cast<double>(n - 1);
  if (u < -slack || u > last + slack) return std::nullopt;
  long base = static_cast<long>(std::floor(u)) - 1;
  if (base < 0) base = 0;
  if (base > static_cast<long>(n) - 4) base = static_cast<long>(n) - 4;
  CubicStencil s;
  s.start = static_cast<std::size_t>(base);
  const double r = u - static_cast<double>(base);  // position relative to the first node, nodes at 0,1,2,3
  for (int j = 0; j < 4; ++j) {
    double w = 1.0;
    for (int m = 0; m < 4; ++m)
      if (m != j) w *= (r - m) / static_cast<double>(j - m);
    s.weights[j] = w;
  }
  return s;
}

}  // namespace kfuzzy::numerics
