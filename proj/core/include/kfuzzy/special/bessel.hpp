#pragma once

#include <complex>

#include "kfuzzy/tolerances.hpp"

namespace kfuzzy::special {

// Bessel order with its distance to the nearest integer. Supported range |Re ν|, |Im ν| ≤ 50.
class BesselOrder {
 public:
  explicit BesselOrder(std::complex<double> nu, const Tolerances& tol = default_tolerances());

  std::complex<double> nu() const { return nu_; }
  double integer_distance() const { return integer_distance_; }
  bool is_near_integer() const { return near_integer_; }

 private:
  std::complex<double> nu_;
  double integer_distance_;
  bool near_integer_;
};

// J_ν(x) for 0 < x ≤ 60 from the ascending series, accumulated in double-double arithmetic.
std::complex<double> bessel_j(const BesselOrder& nu, double x, const Tolerances& tol = default_tolerances());

struct HankelOptions {
  bool integer_limit = true;  // average ν ± ε (with Richardson extrapolation) near integer orders
};

// Hankel function of the first (kind = 1) or second (kind = 2) kind.
std::complex<double> hankel(int kind, const BesselOrder& nu, double x, const HankelOptions& opts = {},
                            const Tolerances& tol = default_tolerances());

struct HankelPair {
  std::complex<double> h1;
  std::complex<double> h2;
};

// Both kinds from a single evaluation of J_{±ν}.
HankelPair hankel_both(const BesselOrder& nu, double x, const HankelOptions& opts = {},
                       const Tolerances& tol = default_tolerances());

// Derivatives by the recurrence f′_ν = (f_{ν−1} − f_{ν+1})/2.
std::complex<double> bessel_j_prime(const BesselOrder& nu, double x, const Tolerances& tol = default_tolerances());
std::complex<double> hankel_prime(int kind, const BesselOrder& nu, double x, const HankelOptions& opts = {},
                                  const Tolerances& tol = default_tolerances());

}  // namespace kfuzzy::special
