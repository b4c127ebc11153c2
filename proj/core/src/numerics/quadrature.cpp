#include "kfuzzy/numerics/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::numerics {

namespace {

void check_interval(double a, double b) {
  if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw RangeError("quadrature: need finite a < b");
}

void check_finite(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError("quad_integrate: non-finite integrand");
}

}  // namespace

Quadrature gauss_legendre(std::size_t n, double a, double b) {
  check_interval(a, b);
  if (n == 0) throw DimensionError("gauss_legendre: need at least one node");
  Quadrature q{std::vector<double>(n), std::vector<double>(n), a, b};
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) {
        p1 = x;
        p0 = 1.0;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // recompute the derivative at the converged node
    double p0 = 1.0, p1 = x;
    for (std::size_t k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
      p0 = p1;
      p1 = p2;
    }
    dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    q.nodes[i] = mid - half * x;
    q.nodes[n - 1 - i] = mid + half * x;
    q.weights[i] = half * w;
    q.weights[n - 1 - i] = half * w;
  }
  return q;
}

Quadrature composite_gauss_legendre(std::size_t n, std::size_t panels, double a, double b) {
  check_interval(a, b);
  if (panels == 0) throw DimensionError("composite_gauss_legendre: need at least one panel");
  Quadrature q{{}, {}, a, b};
  q.nodes.reserve(n * panels);
  q.weights.reserve(n * panels);
  const double h = (b - a) / static_cast<double>(panels);
  for (std::size_t p = 0; p < panels; ++p) {
    const Quadrature g = gauss_legendre(n, a + h * p, p + 1 == panels ? b : a + h * (p + 1));
    q.nodes.insert(q.nodes.end(), g.nodes.begin(), g.nodes.end());
    q.weights.insert(q.weights.end(), g.weights.begin(), g.weights.end());
  }
  return q;
}

Quadrature trapezoid(std::size_t n, double a, double b) {
  check_interval(a, b);
  if (n < 2) throw DimensionError("trapezoid: need at least two nodes");
  Quadrature q{std::vector<double>(n), std::vector<double>(n), a, b};
  const double h = (b - a) / static_cast<double>(n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    q.nodes[i] = i + 1 == n ? b : a + h * static_cast<double>(i);
    q.weights[i] = (i == 0 || i + 1 == n) ? 0.5 * h : h;
  }
  return q;
}

Complex quad_integrate(const RealFunction& f, const Quadrature& rule) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const Complex v = f(rule.nodes[i]);
    check_finite(v);
    s += rule.weights[i] * v;
  }
  return s;
}

Complex quad_integrate(std::span<const Complex> samples, const Quadrature& rule) {
  if (samples.size() != rule.size()) throw DimensionError("quad_integrate: sample count does not match the rule");
  Complex s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    check_finite(samples[i]);
    s += rule.weights[i] * samples[i];
  }
  return s;
}

Complex quad_integrate(std::span<const double> samples, const Quadrature& rule) {
  if (samples.size() != rule.size()) throw DimensionError("quad_integrate: sample count does not match the rule");
  double s = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    if (!std::isfinite(samples[i])) throw InputError("quad_integrate: non-finite integrand");
    s += rule.weights[i] * samples[i];
  }
  return s;
}

Complex integrate_half_line(const RealFunction& f, const HalfLineOptions& opts) {
  const Quadrature rule = composite_gauss_legendre(opts.order, opts.panels, opts.u_min, opts.u_max);
  Complex s = 0.0;
  double peak = 0.0;
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = std::exp(rule.nodes[i]);
    const Complex v = f(t) * t;
    check_finite(v);
    peak = std::max(peak, std::abs(v));
    s += rule.weights[i] * v;
  }
  const double lo = std::abs(f(std::exp(opts.u_min)) * std::exp(opts.u_min));
  const double hi = std::abs(f(std::exp(opts.u_max)) * std::exp(opts.u_max));
  if (std::max(lo, hi) > opts.tail_tolerance * std::max(peak, 1e-300)) {
    char msg[160];
    std::snprintf(msg, sizeof msg,
                  "integrate_half_line: integrand not decayed at the window ends (|lower| = %.3e, |upper| = %.3e, "
                  "peak = %.3e)",
                  lo, hi, peak);
    throw ConvergenceError(msg);
  }
  return s;
}

}  // namespace kfuzzy::numerics
