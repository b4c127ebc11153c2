#include "kfuzzy/special/bessel.hpp"

#include <cmath>
#include <string>

#include "double_double.hpp"
#include "kfuzzy/errors.hpp"
#include "kfuzzy/special/gamma.hpp"
#include "trig_pi.hpp"

namespace kfuzzy::special {

namespace {

using Complex = std::complex<double>;
using detail::CDD;
using detail::DD;

constexpr double kMaxOrder = 50.0;
constexpr double kMaxArgument = 60.0;
constexpr int kMaxTerms = 600;

void check_argument(double x) {
  if (!(x > 0.0) || x > kMaxArgument || !std::isfinite(x))
    throw RangeError("Bessel argument must satisfy 0 < x <= 60, got " + std::to_string(x));
}

bool is_negative_integer(Complex nu) {
  return nu.imag() == 0.0 && nu.real() < 0.0 && nu.real() == std::round(nu.real());
}

// Σ_m (−x²/4)^m / (m! (ν+1)_m) in double-double arithmetic.
Complex series_sum(Complex nu, double x, double tail) {
  const DD x2 = detail::two_prod(x, x);
  const DD z{-0.25 * x2.hi, -0.25 * x2.lo};
  const CDD zc{z, DD{}};
  CDD term{DD{1.0, 0.0}, DD{}};
  CDD sum = term;
  const double zabs = std::abs(z.hi);
  for (int m = 1; m < kMaxTerms; ++m) {
    const DD re = detail::two_sum(nu.real(), static_cast<double>(m));
    const CDD den{re * static_cast<double>(m), detail::two_prod(nu.imag(), static_cast<double>(m))};
    term = term * zc / den;
    sum = sum + term;
    const double ratio = zabs / (static_cast<double>(m) * std::abs(Complex(re.hi, nu.imag())));
    if (ratio < 0.5 && detail::magnitude(term) <= tail * detail::magnitude(sum)) return detail::to_complex(sum);
  }
  throw ConvergenceError("bessel_j: series did not converge");
}

Complex bessel_j_raw(Complex nu, double x, double tail) {
  if (is_negative_integer(nu)) {
    const long n = -static_cast<long>(nu.real());
    const Complex j = bessel_j_raw(-nu, x, tail);
    return n % 2 == 0 ? j : -j;
  }
  const Complex pref = std::exp(nu * std::log(0.5 * x)) * rgamma_complex(nu + 1.0);
  return pref * series_sum(nu, x, tail);
}

HankelPair hankel_raw(Complex nu, double x, double tail) {
  const Complex jp = bessel_j_raw(nu, x, tail);
  const Complex jm = bessel_j_raw(-nu, x, tail);
  const Complex s = detail::sin_pi(nu);
  const Complex i(0.0, 1.0);
  return {(jm - detail::exp_i_pi(-nu) * jp) / (i * s), (jm - detail::exp_i_pi(nu) * jp) / (-i * s)};
}

}  // namespace

BesselOrder::BesselOrder(Complex nu, const Tolerances& tol) : nu_(nu) {
  if (!std::isfinite(nu.real()) || !std::isfinite(nu.imag())) throw InputError("BesselOrder: non-finite order");
  if (std::abs(nu.real()) > kMaxOrder || std::abs(nu.imag()) > kMaxOrder)
    throw RangeError("BesselOrder: |Re nu| and |Im nu| must not exceed 50");
  integer_distance_ = std::abs(nu - Complex(std::round(nu.real()), 0.0));
  near_integer_ = integer_distance_ < tol.near_integer;
}

Complex bessel_j(const BesselOrder& nu, double x, const Tolerances& tol) {
  check_argument(x);
  return bessel_j_raw(nu.nu(), x, tol.bessel_series_tail);
}

HankelPair hankel_both(const BesselOrder& nu, double x, const HankelOptions& opts, const Tolerances& tol) {
  check_argument(x);
  const Complex v = nu.nu();
  if (!nu.is_near_integer()) return hankel_raw(v, x, tol.bessel_series_tail);
  if (!opts.integer_limit) throw DegenerateOrderError("hankel: integer order requires limit handling");
  const double eps = tol.integer_limit_step;
  auto average = [&](double e) {
    const HankelPair a = hankel_raw(v + e, x, tol.bessel_series_tail);
    const HankelPair b = hankel_raw(v - e, x, tol.bessel_series_tail);
    return HankelPair{0.5 * (a.h1 + b.h1), 0.5 * (a.h2 + b.h2)};
  };
  const HankelPair a1 = average(eps), a2 = average(2.0 * eps);
  return {(4.0 * a1.h1 - a2.h1) / 3.0, (4.0 * a1.h2 - a2.h2) / 3.0};
}

Complex hankel(int kind, const BesselOrder& nu, double x, const HankelOptions& opts, const Tolerances& tol) {
  if (kind != 1 && kind != 2) throw PreconditionError("hankel: kind must be 1 or 2");
  const HankelPair p = hankel_both(nu, x, opts, tol);
  return kind == 1 ? p.h1 : p.h2;
}

Complex bessel_j_prime(const BesselOrder& nu, double x, const Tolerances& tol) {
  check_argument(x);
  return 0.5 * (bessel_j_raw(nu.nu() - 1.0, x, tol.bessel_series_tail) -
                bessel_j_raw(nu.nu() + 1.0, x, tol.bessel_series_tail));
}

Complex hankel_prime(int kind, const BesselOrder& nu, double x, const HankelOptions& opts, const Tolerances& tol) {
  const BesselOrder lo(nu.nu() - 1.0, tol), hi(nu.nu() + 1.0, tol);
  return 0.5 * (hankel(kind, lo, x, opts, tol) - hankel(kind, hi, x, opts, tol));
}

}  // namespace kfuzzy::special
