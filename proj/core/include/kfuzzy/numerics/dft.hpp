#pragma once

#include <span>
#include <vector>

#include "kfuzzy/numerics/matrix.hpp"

namespace kfuzzy::numerics {

enum class Direction { Forward, Inverse };

// Unitary discrete Fourier transform: forward uses e^{−2πijk/n}, both directions scale by 1/√n.
// Radix-2 for power-of-two lengths, direct summation otherwise.
CVector dft(std::span<const Complex> v, Direction dir);

// Angular wavenumbers 2πm/(n h) in dft output order (m = 0..n/2−1, −n/2..−1).
std::vector<double> wavenumbers(std::size_t n, double h);

// Samples of f(x + s) on the same periodic grid, by phase-ramp shifting.
CVector spectral_shift(std::span<const Complex> f, double h, double s);

// Trigonometric interpolant of periodic samples f_j = f(x0 + j h) evaluated at arbitrary points.
// The Nyquist mode is split symmetrically so real data stay real.
CVector spectral_eval(std::span<const Complex> f, double x0, double h, std::span<const double> xs);

// Matrix E with E·f = spectral_eval(f, x0, h, xs).
CMatrix spectral_eval_matrix(std::size_t n, double x0, double h, std::span<const double> xs);

}  // namespace kfuzzy::numerics
