#include "kfuzzy/special/gamma.hpp"

#include <cmath>
#include <numbers>

#include "kfuzzy/errors.hpp"
#include "trig_pi.hpp"

namespace kfuzzy::special {

namespace {

using Complex = std::complex<double>;

constexpr double kG = 7.0;
constexpr double kLanczos[9] = {0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
                                771.32342877765313,   -176.61502916214059,   12.507343278686905,
                                -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_pole(Complex z) { return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::round(z.real()); }

// Valid for Re z ≥ 1/2.
Complex lanczos(Complex z) {
  z -= 1.0;
  Complex a = kLanczos[0];
  for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + static_cast<double>(i));
  const Complex t = z + kG + 0.5;
  return std::sqrt(2.0 * std::numbers::pi) * std::exp((z + 0.5) * std::log(t) - t) * a;
}

}  // namespace

Complex gamma_complex(Complex z) {
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) throw InputError("gamma_complex: non-finite argument");
  if (is_pole(z)) throw PoleError("gamma_complex: pole at non-positive integer");
  if (z.real() < 0.5) return std::numbers::pi / (detail::sin_pi(z) * lanczos(1.0 - z));
  return lanczos(z);
}

Complex rgamma_complex(Complex z) {
  if (is_pole(z)) return 0.0;
  if (z.real() < 0.5) return detail::sin_pi(z) * lanczos(1.0 - z) / std::numbers::pi;
  return 1.0 / lanczos(z);
}

}  // namespace kfuzzy::special
