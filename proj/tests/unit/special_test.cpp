#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/special/bessel.hpp"
#include "kfuzzy/special/gamma.hpp"
#include "test_support.hpp"

using namespace kfuzzy;
using namespace kfuzzy::special;
using Complex = std::complex<double>;

namespace {

const Complex kI(0.0, 1.0);

double rel(Complex a, Complex b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

// Sweep used by the recurrence and Wronskian properties.
const Complex kOrders[] = {Complex(0.3, 0.0), Complex(0.5, 0.0), Complex(1.7, 0.0), Complex(0.0, 0.4)};
const double kArgs[] = {0.1, 0.5, 1.0, 2.0, 3.7, 5.0, 8.0, 12.5, 16.0, 20.0};

}  // namespace

TEST(Gamma, KnownValues) {
  EXPECT_LT(rel(gamma_complex(1.0), 1.0), 1e-14);
  EXPECT_LT(rel(gamma_complex(0.5), std::sqrt(std::numbers::pi)), 1e-14);
  EXPECT_LT(rel(gamma_complex(5.0), 24.0), 1e-14);
  EXPECT_LT(rel(gamma_complex(-0.5), -2.0 * std::sqrt(std::numbers::pi)), 1e-14);
}

TEST(Gamma, RecurrenceAtComplexPoint) {
  const Complex z(0.3, 0.7);
  EXPECT_LT(rel(gamma_complex(z + 1.0), z * gamma_complex(z)), 1e-13);
}

TEST(Gamma, AgreesWithTgammaOnReals) {
  for (double x : {0.1, 0.77, 1.5, 3.3, 7.9, -1.3, -2.6})
    EXPECT_LT(rel(gamma_complex(x), std::tgamma(x)), 1e-13) << x;
}

TEST(Gamma, PolesAndReciprocal) {
  EXPECT_THROW(gamma_complex(0.0), PoleError);
  EXPECT_THROW(gamma_complex(-3.0), PoleError);
  EXPECT_EQ(rgamma_complex(-3.0), Complex(0.0));
  EXPECT_LT(rel(rgamma_complex(Complex(0.3, 0.7)) * gamma_complex(Complex(0.3, 0.7)), 1.0), 1e-14);
}

TEST(BesselOrder, NearIntegerFlagAndRange) {
  EXPECT_TRUE(BesselOrder(2.0 + 1e-8).is_near_integer());
  EXPECT_FALSE(BesselOrder(2.0 + 1e-4).is_near_integer());
  EXPECT_FALSE(BesselOrder(Complex(0.0, 0.4)).is_near_integer());
  EXPECT_THROW(BesselOrder(Complex(51.0, 0.0)), RangeError);
  EXPECT_THROW(BesselOrder(Complex(0.0, -50.5)), RangeError);
}

TEST(BesselJ, HalfOrderClosedForm) {
  const double x = std::numbers::pi / 2;
  EXPECT_NEAR(bessel_j(BesselOrder(0.5), x).real(), 2.0 / std::numbers::pi, 1e-14);
  for (double y : {0.3, 2.0, 9.0, 25.0}) {
    const double exact = std::sqrt(2.0 / (std::numbers::pi * y)) * std::sin(y);
    EXPECT_LT(std::abs(bessel_j(BesselOrder(0.5), y) - exact), 1e-12 * std::max(1.0, std::abs(exact)));
  }
}

TEST(BesselJ, IntegerAndRealOrdersAgainstLongDoubleSeries) {
  EXPECT_NEAR(bessel_j(BesselOrder(0.0), 1.0).real(), 0.7651976865579666, 1e-15);
  for (double nu : {0.0, 0.3, 1.7, 4.25})
    for (double x : {0.2, 1.0, 6.0, 15.0}) {
      const double oracle = static_cast<double>(kfuzzy::testing::bessel_j_series(nu, x));
      EXPECT_LT(std::abs(bessel_j(BesselOrder(nu), x) - oracle), 1e-12 * std::max(1.0, std::abs(oracle)))
          << "nu " << nu << " x " << x;
    }
}

TEST(BesselJ, RecurrenceSweep) {
  for (Complex nu : kOrders)
    for (double x : kArgs) {
      const Complex jm = bessel_j(BesselOrder(nu - 1.0), x);
      const Complex j0 = bessel_j(BesselOrder(nu), x);
      const Complex jp = bessel_j(BesselOrder(nu + 1.0), x);
      const double scale = std::max({std::abs(jm), std::abs(j0), std::abs(jp)});
      EXPECT_LT(std::abs(jm + jp - (2.0 * nu / x) * j0), 1e-10 * scale) << nu << " " << x;
    }
}

TEST(BesselJ, ImaginaryOrderConjugation) {
  for (double x : kArgs) {
    const Complex a = bessel_j(BesselOrder(Complex(0.0, 0.4)), x);
    const Complex b = bessel_j(BesselOrder(Complex(0.0, -0.4)), x);
    EXPECT_LT(std::abs(std::conj(a) - b), 1e-13 * std::max(1.0, std::abs(b)));
  }
}

TEST(BesselJ, ArgumentRange) {
  EXPECT_THROW(bessel_j(BesselOrder(0.3), 0.0), RangeError);
  EXPECT_THROW(bessel_j(BesselOrder(0.3), 61.0), RangeError);
}

TEST(Hankel, HalfIntegerClosedForm) {
  const Complex h = hankel(1, BesselOrder(0.5), 1.0);
  EXPECT_NEAR(h.real(), 0.6713967071418031, 1e-12);
  EXPECT_NEAR(h.imag(), -0.4310988680183761, 1e-12);
  for (double x : {0.1, 1.0, 4.0, 17.0}) {
    const Complex h1 = -kI * std::sqrt(2.0 / (std::numbers::pi * x)) * std::exp(kI * x);
    const Complex h2 = kI * std::sqrt(2.0 / (std::numbers::pi * x)) * std::exp(-kI * x);
    EXPECT_LT(rel(hankel(1, BesselOrder(0.5), x), h1), 1e-12);
    EXPECT_LT(rel(hankel(2, BesselOrder(0.5), x), h2), 1e-12);
    // H_{3/2}^{(1)}(x) = −√(2/(πx)) e^{ix}(1 + i/x)
    const Complex h32 = -std::sqrt(2.0 / (std::numbers::pi * x)) * std::exp(kI * x) * (1.0 + kI / x);
    EXPECT_LT(rel(hankel(1, BesselOrder(1.5), x), h32), 1e-12);
  }
}

TEST(Hankel, SumIsTwiceJ) {
  const BesselOrder nu(0.3);
  EXPECT_LT(rel(hankel(1, nu, 2.0) + hankel(2, nu, 2.0), 2.0 * bessel_j(nu, 2.0)), 1e-13);
  const auto both = hankel_both(nu, 2.0);
  EXPECT_LT(rel(both.h1, hankel(1, nu, 2.0)), 1e-15);
  EXPECT_LT(rel(both.h2, hankel(2, nu, 2.0)), 1e-15);
}

TEST(Hankel, WronskianAtExample) {
  const BesselOrder nu(1.7);
  const double x = 5.0;
  const Complex w = hankel(1, nu, x) * hankel_prime(2, nu, x) - hankel_prime(1, nu, x) * hankel(2, nu, x);
  EXPECT_LT(rel(w, -4.0 * kI / (std::numbers::pi * x)), 1e-10);
}

TEST(Hankel, WronskianSweep) {
  for (Complex nu : kOrders)
    for (double x : kArgs) {
      const BesselOrder o(nu);
      const Complex w = hankel(1, o, x) * hankel_prime(2, o, x) - hankel_prime(1, o, x) * hankel(2, o, x);
      EXPECT_LT(rel(w, -4.0 * kI / (std::numbers::pi * x)), 1e-10) << nu << " " << x;
    }
}

TEST(Hankel, IntegerOrderLimit) {
  // Y_0(1) = 0.08825696421567696
  const Complex h = hankel(1, BesselOrder(0.0), 1.0);
  EXPECT_NEAR(h.real(), 0.7651976865579666, 1e-12);
  EXPECT_NEAR(h.imag(), 0.08825696421567696, 1e-8);
  HankelOptions off;
  off.integer_limit = false;
  EXPECT_THROW(hankel(1, BesselOrder(1.0), 1.0, off), DegenerateOrderError);
  EXPECT_THROW(hankel(3, BesselOrder(0.3), 1.0), PreconditionError);
}

TEST(Hankel, KindsConjugateForRealOrder) {
  for (double x : {0.4, 3.0, 11.0}) {
    const BesselOrder nu(0.3);
    EXPECT_LT(std::abs(std::conj(hankel(1, nu, x)) - hankel(2, nu, x)), 1e-13 * std::abs(hankel(2, nu, x)));
  }
}
