#pragma once

#include <functional>

#include "kfuzzy/numerics/quadrature.hpp"

namespace kfuzzy::representation {

using numerics::Complex;

struct MellinOptions {
  // log window wide enough for t^{1/2} decay at 0; panels resolve e^{−iωu} up to |ω| ≈ 40
  numerics::HalfLineOptions half_line{-80.0, 5.0, 16, 320, 1e-12};
  double omega_max = 40.0;  // |Im σ| cut-off of the inverse line integral
  std::size_t order = 16;
  std::size_t panels = 80;
};

// M(σ) = ∫₀^∞ f(t) t^{−σ−1} dt. Throws ConvergenceError (with the offending end) when the
// integrand has not decayed at the ends of the log window.
Complex mellin(const std::function<Complex(double)>& f, Complex sigma, const MellinOptions& opts = {});

// f(t) = (1/2π) ∫ M(c + iω) t^{c+iω} dω over |ω| ≤ omega_max.
Complex inverse_mellin(const std::function<Complex(Complex)>& m, double c, double t, const MellinOptions& opts = {});

}  // namespace kfuzzy::representation
