#pragma once

// Double-double ("unevaluated sum of two doubles") arithmetic for the Bessel series,
// where partial sums cancel by many orders of magnitude at moderate arguments.

#include <cmath>
#include <complex>

namespace kfuzzy::special::detail {

struct DD {
  double hi = 0.0;
  double lo = 0.0;
};

inline DD two_sum(double a, double b) {
  const double s = a + b;
  const double bb = s - a;
  return {s, (a - (s - bb)) + (b - bb)};
}

inline DD quick_two_sum(double a, double b) {
  const double s = a + b;
  return {s, b - (s - a)};
}

inline DD two_prod(double a, double b) {
  const double p = a * b;
  return {p, std::fma(a, b, -p)};
}

inline DD operator+(DD a, DD b) {
  DD s = two_sum(a.hi, b.hi);
  const DD t = two_sum(a.lo, b.lo);
  s.lo += t.hi;
  s = quick_two_sum(s.hi, s.lo);
  s.lo += t.lo;
  return quick_two_sum(s.hi, s.lo);
}

inline DD operator-(DD a) { return {-a.hi, -a.lo}; }
inline DD operator-(DD a, DD b) { return a + (-b); }

inline DD operator*(DD a, DD b) {
  DD p = two_prod(a.hi, b.hi);
  p.lo += a.hi * b.lo + a.lo * b.hi;
  return quick_two_sum(p.hi, p.lo);
}

inline DD operator*(DD a, double b) {
  DD p = two_prod(a.hi, b);
  p.lo += a.lo * b;
  return quick_two_sum(p.hi, p.lo);
}

inline DD operator/(DD a, DD b) {
  const double q1 = a.hi / b.hi;
  DD r = a - b * q1;
  const double q2 = r.hi / b.hi;
  r = r - b * q2;
  const double q3 = r.hi / b.hi;
  return quick_two_sum(q1, q2) + DD{q3, 0.0};
}

struct CDD {
  DD re;
  DD im;
};

inline CDD operator+(CDD a, CDD b) { return {a.re + b.re, a.im + b.im}; }

inline CDD operator*(CDD a, CDD b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

inline CDD operator*(CDD a, DD s) { return {a.re * s, a.im * s}; }

inline CDD operator/(CDD a, CDD b) {
  const DD den = b.re * b.re + b.im * b.im;
  const CDD num = a * CDD{b.re, -b.im};
  return {num.re / den, num.im / den};
}

inline std::complex<double> to_complex(CDD z) { return {z.re.hi + z.re.lo, z.im.hi + z.im.lo}; }

inline double magnitude(CDD z) { return std::hypot(z.re.hi, z.im.hi); }

}  // namespace kfuzzy::special::detail
