#pragma once

#include <cmath>
#include <complex>
#include <numbers>

namespace kfuzzy::special::detail {

// sin(πz) with the real part reduced exactly modulo 2 first.
inline std::complex<double> sin_pi(std::complex<double> z) {
  const double r = z.real() - 2.0 * std::round(0.5 * z.real());
  return std::sin(std::numbers::pi * std::complex<double>(r, z.imag()));
}

// e^{iπz} with the same reduction.
inline std::complex<double> exp_i_pi(std::complex<double> z) {
  const double r = z.real() - 2.0 * std::round(0.5 * z.real());
  return std::exp(std::complex<double>(0.0, std::numbers::pi) * std::complex<double>(r, z.imag()));
}

}  // namespace kfuzzy::special::detail
