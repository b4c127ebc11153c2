#include "kfuzzy/representation/mellin.hpp"

#include <cmath>
#include <numbers>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::representation {

Complex mellin(const std::function<Complex(double)>& f, Complex sigma, const MellinOptions& opts) {
  return numerics::integrate_half_line(
      [&](double t) { return f(t) * std::exp(-(sigma + 1.0) * std::log(t)); }, opts.half_line);
}

Complex inverse_mellin(const std::function<Complex(Complex)>& m, double c, double t, const MellinOptions& opts) {
  if (!(t > 0.0)) throw PreconditionError("inverse_mellin: t must be positive");
  const auto rule = numerics::composite_gauss_legendre(opts.order, opts.panels, -opts.omega_max, opts.omega_max);
  const double lt = std::log(t);
  const Complex s = numerics::quad_integrate(
      [&](double w) {
        const Complex sigma(c, w);
        return m(sigma) * std::exp(sigma * lt);
      },
      rule);
  return s / (2.0 * std::numbers::pi);
}

}  // namespace kfuzzy::representation
