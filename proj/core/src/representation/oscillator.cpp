#include "kfuzzy/representation/oscillator.hpp"

#include <cmath>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::representation {

OscillatorTruncation::OscillatorTruncation(std::size_t n) : n_(n), a_(n, n) {
  if (n < 2) throw DimensionError("OscillatorTruncation: N must be at least 2");
  for (std::size_t k = 1; k < n; ++k) a_(k - 1, k) = std::sqrt(static_cast<double>(k));
  adag_ = a_.adjoint();
  const double r = 1.0 / std::sqrt(2.0);
  q_ = r * (a_ + adag_);
  p_ = Complex(0.0, -r) * (a_ - adag_);
}

double OscillatorTruncation::ccr_deviation() const {
  const CMatrix c = numerics::commutator(q_, p_) - Complex(0.0, 1.0) * CMatrix::identity(n_);
  return c.block(0, 0, n_ - 1, n_ - 1).norm_fro();
}

CMatrix exact_exp_q_block(std::size_t n) {
  CMatrix e(n, n);
  const double log_alpha = -0.5 * std::log(2.0);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t j = 0; j < n; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k <= std::min(m, j); ++k) {
        const double lg = static_cast<double>(m + j - 2 * k) * log_alpha +
                          0.5 * (std::lgamma(m + 1.0) + std::lgamma(j + 1.0)) - std::lgamma(m - k + 1.0) -
                          std::lgamma(j - k + 1.0) - std::lgamma(k + 1.0);
        s += std::exp(lg);
      }
      e(m, j) = std::exp(0.25) * s;
    }
  return e;
}

}  // namespace kfuzzy::representation
