#pragma once

#include <complex>

namespace kfuzzy::special {

// Γ(z) by the Lanczos approximation (g = 7, nine terms), reflected for Re z < 1/2.
// Throws PoleError at non-positive integers.
std::complex<double> gamma_complex(std::complex<double> z);

// 1/Γ(z), entire; zero at the poles of Γ.
std::complex<double> rgamma_complex(std::complex<double> z);

}  // namespace kfuzzy::special
