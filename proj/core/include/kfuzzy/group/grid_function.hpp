#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "kfuzzy/group/elements.hpp"
#include "kfuzzy/numerics/matrix.hpp"

namespace kfuzzy::group {

using numerics::Complex;

// Uniform axis with `count` points from lo to hi inclusive.
struct GridAxis {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t count = 2;

  double step() const { return (hi - lo) / static_cast<double>(count - 1); }
  double at(std::size_t i) const { return i + 1 == count ? hi : lo + step() * static_cast<double>(i); }
};

// Complex samples on a tensor grid over split coordinates. Axis 0 is t, axes 1..D−1 are y^k.
// Storage is row-major with t varying slowest.
class GridFunction {
 public:
  GridFunction() = default;  // empty, no axes
  GridFunction(std::vector<GridAxis> axes, std::vector<Complex> values);
  static GridFunction zeros(std::vector<GridAxis> axes);
  static GridFunction sample(std::vector<GridAxis> axes, const std::function<Complex(const SplitElement&)>& f);

  int dim() const { return static_cast<int>(axes_.size()); }
  const std::vector<GridAxis>& axes() const { return axes_; }
  std::vector<std::size_t> shape() const;
  std::size_t size() const { return values_.size(); }
  std::span<const Complex> values() const { return values_; }
  std::span<Complex> values() { return values_; }

  std::size_t flat_index(std::span<const std::size_t> idx) const;
  std::vector<std::size_t> multi_index(std::size_t flat) const;
  SplitElement point(std::size_t flat) const;

  // Tensor-product cubic Lagrange interpolation; empty outside the grid.
  std::optional<Complex> interpolate(const SplitElement& p) const;

  double max_abs() const;
  // Largest magnitude on the outermost layer of grid points.
  double boundary_max_abs() const;

 private:
  std::vector<GridAxis> axes_;
  std::vector<Complex> values_;
};

// ∫ f dμ over the grid window by the tensor trapezoid rule, with μ the left or right Haar measure.
Complex integrate(const GridFunction& f, HaarSide side);
Complex integrate(const std::vector<GridAxis>& axes, const std::function<Complex(const SplitElement&)>& f,
                  HaarSide side);

// Relative L² distance ‖a − b‖/‖b‖ over common grid samples.
double relative_l2(const GridFunction& a, const GridFunction& b);

}  // namespace kfuzzy::group
