#pragma once

#include <span>
#include <vector>

namespace kfuzzy::group {

// φ(x) = (eˣ − 1)/x with its removable singularity at 0 filled in.
double phi(double x);

// Element g(x) = exp(i x^μ x̂_μ) in exponential coordinates. Coordinate 0 is the time-like one.
class ExpElement {
 public:
  explicit ExpElement(std::vector<double> x);

  int dim() const { return static_cast<int>(x_.size()); }
  double x0() const { return x_[0]; }
  std::span<const double> spatial() const { return std::span<const double>(x_).subspan(1); }
  std::span<const double> coords() const { return x_; }

 private:
  std::vector<double> x_;
};

// Element in split coordinates, g = g(t, 0)·g(0, y).
class SplitElement {
 public:
  SplitElement(double t, std::vector<double> y);
  static SplitElement identity(int dim);

  int dim() const { return static_cast<int>(y_.size()) + 1; }
  double t() const { return t_; }
  std::span<const double> y() const { return y_; }
  double y(std::size_t k) const { return y_[k]; }

 private:
  double t_;
  std::vector<double> y_;
};

ExpElement multiply_exp(const ExpElement& g1, const ExpElement& g2);
// (t, y)·(s, z) = (t + s, e^{−s} y + z)
SplitElement multiply_split(const SplitElement& g1, const SplitElement& g2);
// (t, y)⁻¹ = (−t, −eᵗ y)
SplitElement inverse(const SplitElement& g);
ExpElement inverse(const ExpElement& g);

SplitElement to_split(const ExpElement& g);
ExpElement from_split(const SplitElement& g);

// Modular function Δ(t, y) = e^{−(D−1)t}.
double modular(const SplitElement& g);

// Densities of the Haar measures in split coordinates.
struct HaarData {
  int dim = 2;
  double left_density(double) const { return 1.0; }
  double right_density(double t) const;
  double modular(double t) const;
};

enum class HaarSide { Left, Right };

// Convert between physical time and the κ = 1 units used everywhere else (t ↦ κt).
SplitElement to_unit_scale(const SplitElement& g, double kappa);
SplitElement from_unit_scale(const SplitElement& g, double kappa);

}  // namespace kfuzzy::group
