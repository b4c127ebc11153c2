#pragma once

#include <functional>
#include <span>
#include <vector>

#include "kfuzzy/numerics/matrix.hpp"

namespace kfuzzy::numerics {

// Nodes and weights of a quadrature rule on [a, b].
struct Quadrature {
  std::vector<double> nodes;
  std::vector<double> weights;
  double a = 0.0;
  double b = 1.0;

  std::size_t size() const { return nodes.size(); }
};

// n-point Gauss-Legendre rule, exact for polynomials of degree ≤ 2n − 1.
Quadrature gauss_legendre(std::size_t n, double a, double b);
// Gauss-Legendre rule of order n on each of `panels` equal sub-intervals.
Quadrature composite_gauss_legendre(std::size_t n, std::size_t panels, double a, double b);
// Trapezoid rule on n ≥ 2 equally spaced nodes including both end points.
Quadrature trapezoid(std::size_t n, double a, double b);

using RealFunction = std::function<Complex(double)>;

Complex quad_integrate(const RealFunction& f, const Quadrature& rule);
// Integrand given by its values at the rule nodes.
Complex quad_integrate(std::span<const Complex> samples, const Quadrature& rule);
Complex quad_integrate(std::span<const double> samples, const Quadrature& rule);

struct HalfLineOptions {
  double u_min = -40.0;  // log-variable window; t = e^u
  double u_max = 5.0;
  std::size_t order = 16;
  std::size_t panels = 64;
  double tail_tolerance = 1e-12;  // relative size allowed for the integrand at the window ends
};

// ∫₀^∞ f(t) dt through the substitution t = e^u. Throws ConvergenceError when the substituted
// integrand has not decayed at the ends of the window.
Complex integrate_half_line(const RealFunction& f, const HalfLineOptions& opts = {});

}  // namespace kfuzzy::numerics
