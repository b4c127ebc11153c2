#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/numerics/linalg.hpp"
#include "kfuzzy/representation/actions.hpp"
#include "kfuzzy/representation/mellin.hpp"
#include "kfuzzy/representation/oscillator.hpp"
#include "kfuzzy/representation/realization.hpp"

using namespace kfuzzy;
using namespace kfuzzy::representation;
using numerics::CMatrix;

namespace {

const double kPi = std::numbers::pi;
const Complex kI(0.0, 1.0);

Complex gauss2(std::span<const double> x, double cx, double cy, double w) {
  const double dx = x[0] - cx, dy = x[1] - cy;
  return std::exp(-(dx * dx + dy * dy) / (w * w)) * std::exp(kI * 0.3 * x[0]);
}

double max_diff(const SampledField& a, const SampledField& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values[i] - b.values[i]));
  return m;
}

double max_abs(const SampledField& a) {
  double m = 0.0;
  for (const auto& v : a.values) m = std::max(m, std::abs(v));
  return m;
}

// Compares on samples at least `margin` points from every edge of a 1-D or 2-D field.
double interior_max_diff(const SampledField& a, const SampledField& b, std::size_t margin) {
  double m = 0.0;
  const std::size_t n0 = a.axes[0].count;
  const std::size_t n1 = a.axes.size() > 1 ? a.axes[1].count : 1;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const std::size_t i0 = i / n1, i1 = i % n1;
    if (i0 < margin || i0 + margin >= n0) continue;
    if (n1 > 1 && (i1 < margin || i1 + margin >= n1)) continue;
    m = std::max(m, std::abs(a.values[i] - b.values[i]));
  }
  return m;
}

}  // namespace

TEST(Oscillator, LadderAndCcr) {
  const OscillatorTruncation osc(8);
  EXPECT_NEAR(std::abs(osc.a()(2, 3) - std::sqrt(3.0)), 0.0, 1e-15);
  EXPECT_LT((osc.adag() - osc.a().adjoint()).norm_max(), 1e-15);
  EXPECT_LT(osc.ccr_deviation(), 1e-13);
  // the last state feels the cut-off: [Q, P] = i(I − N|N−1⟩⟨N−1|)
  const CMatrix c = numerics::commutator(osc.q(), osc.p());
  EXPECT_NEAR(std::abs(c(7, 7) - Complex(0.0, -7.0)), 0.0, 1e-13);
  EXPECT_THROW(OscillatorTruncation(1), DimensionError);
}

TEST(Oscillator, ExpQBlockIsTheLimitOfTruncations) {
  // Leading 6×6 block of expm(Q_N) approaches the closed form as N grows.
  const CMatrix exact = exact_exp_q_block(6);
  EXPECT_NEAR(exact(0, 0).real(), std::exp(0.25), 1e-14);
  double prev = INFINITY;
  // beyond N = 16 the difference sits at roundoff
  for (std::size_t n : {8, 12, 16}) {
    const CMatrix e = numerics::expm(OscillatorTruncation(n).q());
    const double d = (e.block(0, 0, 6, 6) - exact).norm_max();
    EXPECT_LT(d, prev);
    prev = d;
  }
  EXPECT_LT(prev, 1e-12);
}

TEST(JordanSchwinger, GridProjectedCommutator) {
  const GridRealization grid(VariableKind::QLine, 8.0, 256);
  const auto ops = jordan_schwinger(grid, {1.0});
  EXPECT_EQ(ops.dim(), 2);
  EXPECT_EQ(ops.size(), 256u);
  const CMatrix states = bump_test_states(grid, 6);
  EXPECT_LT(projected_commutator_deviation(ops, states), 1e-3);
  // X0 is Hermitian and X1 is diagonal positive for λ = 1
  EXPECT_LT((ops.x0 - ops.x0.adjoint()).norm_max(), 1e-12);
  EXPECT_NEAR(ops.xk[0](10, 10).real(), std::exp(grid.node(10)), 1e-12 * std::exp(grid.node(10)));
}

TEST(JordanSchwinger, OscillatorRefinementDecreases) {
  // deviation on the lowest N/2 states
  auto half = [](std::size_t n) {
    return projected_commutator_deviation(jordan_schwinger(OscillatorTruncation(n), {1.0}), low_block_states(n, n / 2));
  };
  const double d16 = half(16), d32 = half(32), d64 = half(64);
  EXPECT_LT(d32, d16);
  EXPECT_LT(d64, d32);
  EXPECT_LT(d64, 1e-9);
}

TEST(JordanSchwinger, SpatialGeneratorsCommute) {
  const GridRealization grid(VariableKind::QLine, 6.0, 64);
  const double c = std::cos(0.7), s = std::sin(0.7);
  const auto ops = jordan_schwinger(grid, {c, s});
  EXPECT_EQ(ops.dim(), 3);
  EXPECT_EQ(spatial_commutator_norm(ops), 0.0);
  const auto osc = jordan_schwinger(OscillatorTruncation(16), {c, s});
  EXPECT_LT(spatial_commutator_norm(osc), 1e-12);
}

TEST(JordanSchwinger, Preconditions) {
  const GridRealization grid(VariableKind::QLine, 6.0, 64);
  EXPECT_THROW(jordan_schwinger(grid, {0.9}), PreconditionError);
  EXPECT_THROW(jordan_schwinger(grid, {1.0, 1e-5}), PreconditionError);
  EXPECT_THROW(jordan_schwinger(grid, {}), DimensionError);
  EXPECT_THROW(jordan_schwinger(GridRealization(VariableKind::KSpaceRays, 6.0, 64), {1.0}), PreconditionError);
  EXPECT_THROW(GridRealization(VariableKind::QLine, 6.0, 100), PreconditionError);
  EXPECT_THROW(GridRealization(VariableKind::QLine, 6.0, 8), PreconditionError);
  EXPECT_THROW(GridRealization(VariableKind::QLine, -1.0, 64), PreconditionError);
  EXPECT_EQ(GridRealization(VariableKind::KSpaceRays, 6.0, 64).carrier_size(), 128u);
  EXPECT_THROW(two_ray_operators(grid), PreconditionError);
}

TEST(JordanSchwinger, GridTranslationIsExactShift) {
  // e^{itX0} shifts band-limited samples by t: (e^{itX0}ψ)(Q) = ψ(Q + t).
  const GridRealization grid(VariableKind::QLine, 8.0, 128);
  const auto ops = jordan_schwinger(grid, {1.0});
  const double t = 0.37;
  const CMatrix u = numerics::expm(Complex(0.0, t) * ops.x0);
  numerics::CVector psi(grid.m());
  for (std::size_t j = 0; j < grid.m(); ++j) psi[j] = std::exp(-grid.node(j) * grid.node(j) / 2.0);
  const auto out = u * std::span<const Complex>(psi);
  double err = 0.0;
  for (std::size_t j = 0; j < grid.m(); ++j) {
    const double q = grid.node(j) + t;
    err = std::max(err, std::abs(out[j] - std::exp(-q * q / 2.0)));
  }
  EXPECT_LT(err, 1e-9);
}

TEST(ActLOmega, IdentityAndWarning) {
  const std::vector<GridAxis> axes{{-8.0, 8.0, 64}, {-8.0, 8.0, 64}};
  const auto f = SampledField::sample(axes, [](std::span<const double> x) { return gauss2(x, 0.0, 0.0, 1.5); });
  const auto r = act_l_omega(0.8, f, SplitElement::identity(3));
  EXPECT_LT(max_diff(r.field, f), 1e-12);
  EXPECT_FALSE(r.truncation_warning);
  // a large contraction of the argument pulls points from outside the window
  EXPECT_TRUE(act_l_omega(0.8, f, SplitElement(-1.0, {0.0, 0.0})).truncation_warning);
  EXPECT_THROW(act_l_omega(0.8, f, SplitElement(0.0, {0.0})), DimensionError);
}

TEST(ActLOmega, MatchesPullbackFormula) {
  const std::vector<GridAxis> axes{{-10.0, 10.0, 128}};
  const auto fn = [](std::span<const double> x) { return std::exp(-x[0] * x[0] / 2.0) * (1.0 + 0.2 * x[0]); };
  const auto f = SampledField::sample(axes, fn);
  const double omega = 1.3, t = 0.4, y = 0.6;
  const auto r = act_l_omega(omega, f, SplitElement(t, {y}));
  double err = 0.0;
  for (std::size_t i = 0; i < r.field.size(); ++i) {
    const double x = r.field.point(i)[0];
    const double src = std::exp(-t) * x - y;
    err = std::max(err, std::abs(r.field.values[i] - std::exp(kI * omega * t) * fn(std::span<const double>(&src, 1))));
  }
  EXPECT_LT(err, 1e-8);
}

TEST(ActLOmega, GeneratorsMatchFlowDerivative) {
  const std::vector<GridAxis> axes{{-10.0, 10.0, 96}, {-10.0, 10.0, 96}};
  const auto f = SampledField::sample(axes, [](std::span<const double> x) { return gauss2(x, 0.4, -0.3, 1.7); });
  const double omega = 0.9, h = 1e-3;
  for (int mu = 0; mu < 3; ++mu) {
    auto element = [&](double s) {
      std::vector<double> y{0.0, 0.0};
      if (mu > 0) y[static_cast<std::size_t>(mu - 1)] = s;
      return SplitElement(mu == 0 ? s : 0.0, y);
    };
    // fourth-order central difference of the flow at 0
    const auto p1 = act_l_omega(omega, f, element(h)).field, m1 = act_l_omega(omega, f, element(-h)).field;
    const auto p2 = act_l_omega(omega, f, element(2 * h)).field, m2 = act_l_omega(omega, f, element(-2 * h)).field;
    SampledField d = f;
    for (std::size_t i = 0; i < d.size(); ++i)
      d.values[i] = (8.0 * (p1.values[i] - m1.values[i]) - (p2.values[i] - m2.values[i])) / (12.0 * h);
    auto gen = generator_l_omega(omega, f, mu);
    for (auto& v : gen.values) v *= kI;
    EXPECT_LT(max_diff(d, gen) / max_abs(gen), 1e-6) << "mu " << mu;
  }
}

TEST(ActLOmega, CompositionIsHomomorphism) {
  const std::vector<GridAxis> axes{{-12.0, 12.0, 128}, {-12.0, 12.0, 128}};
  const auto f = SampledField::sample(axes, [](std::span<const double> x) { return gauss2(x, 0.2, 0.1, 1.4); });
  const SplitElement g1(0.3, {0.5, -0.2}), g2(-0.2, {0.1, 0.4});
  const double omega = 0.6;
  // l(g2)(l(g1) f) = l(g2 g1) f
  const auto two = act_l_omega(omega, act_l_omega(omega, f, g1).field, g2).field;
  const auto one = act_l_omega(omega, f, group::multiply_split(g2, g1)).field;
  EXPECT_LT(max_diff(two, one) / max_abs(one), 1e-8);
  const auto wrong = act_l_omega(omega, f, group::multiply_split(g1, g2)).field;
  EXPECT_GT(max_diff(two, wrong) / max_abs(one), 1e-2);
}

TEST(ActL0F, IdentityUnitarityAndWarning) {
  const std::vector<GridAxis> axes{{-12.0, 12.0, 128}, {-12.0, 12.0, 128}};
  const auto f = SampledField::sample(axes, [](std::span<const double> k) { return gauss2(k, 0.5, -0.5, 1.2); });
  const auto id = act_l0F(f, SplitElement::identity(3));
  EXPECT_LT(max_diff(id.field, f), 1e-12);
  EXPECT_FALSE(id.truncation_warning);
  for (const auto& g : {SplitElement(0.4, {0.3, -0.7}), SplitElement(-0.5, {1.1, 0.2})}) {
    const auto r = act_l0F(f, g);
    EXPECT_NEAR(r.field.norm() / f.norm(), 1.0, 1e-8);
  }
  // the plain weighting scales the norm by e^{−(D−1)t/2}
  const auto plain = act_l0F(f, SplitElement(0.4, {0.0, 0.0}), L0FWeight::Plain);
  EXPECT_NEAR(plain.field.norm() / f.norm(), std::exp(-0.4), 1e-8);
  EXPECT_TRUE(act_l0F(f, SplitElement(1.5, {0.0, 0.0})).truncation_warning);
}

TEST(ActL0F, MatchesDilationPhaseFormula) {
  const std::vector<GridAxis> axes{{-12.0, 12.0, 128}};
  const auto fn = [](std::span<const double> k) { return std::exp(-k[0] * k[0] / 3.0) * (k[0] + 0.5); };
  const auto f = SampledField::sample(axes, fn);
  const double t = 0.35, y = -0.8;
  const auto r = act_l0F(f, SplitElement(t, {y}));
  double err = 0.0;
  for (std::size_t i = 0; i < r.field.size(); ++i) {
    const double k = r.field.point(i)[0], ks = std::exp(t) * k;
    const Complex expect = std::exp(t / 2) * std::exp(kI * std::exp(t) * k * y) * fn(std::span<const double>(&ks, 1));
    err = std::max(err, std::abs(r.field.values[i] - expect));
  }
  EXPECT_LT(err, 1e-8);
}

TEST(ActL0F, GeneratorCommutator) {
  const std::vector<GridAxis> axes{{-14.0, 14.0, 128}, {-14.0, 14.0, 128}};
  const auto f = SampledField::sample(axes, [](std::span<const double> k) { return gauss2(k, 0.3, 0.6, 1.5); });
  for (int i = 1; i <= 2; ++i) {
    const auto x0xi = generator_l0F(generator_l0F(f, i), 0);
    const auto xix0 = generator_l0F(generator_l0F(f, 0), i);
    const auto xi = generator_l0F(f, i);
    SampledField lhs = f, rhs = f;
    for (std::size_t n = 0; n < f.size(); ++n) {
      lhs.values[n] = x0xi.values[n] - xix0.values[n];
      rhs.values[n] = -kI * xi.values[n];
    }
    EXPECT_LT(interior_max_diff(lhs, rhs, 8) / max_abs(rhs), 1e-8);
  }
  EXPECT_THROW(generator_l0F(f, 3), DimensionError);
}

TEST(ActL0F, RayRestrictionIsJordanSchwinger) {
  // f vanishing to second order at k = 0 so that e^{Q/2} f(±e^Q) decays at both ends of the Q window.
  const KFunction f = [](std::span<const double> k) {
    return k[0] * k[0] * std::exp(-k[0] * k[0]) * Complex(1.0, 0.3 * k[0]);
  };
  const GridRealization grid(VariableKind::QLine, 8.0, 256);
  const auto nodes = grid.nodes();
  const double t = 0.3, y = 0.45;
  const auto moved = act_l0F(f, SplitElement(t, {y}));
  for (int s : {1, -1}) {
    const auto psi = ray_restriction(f, nodes, s);
    const auto image = ray_restriction(moved, nodes, s);
    // U(t, y) = e^{itX0}e^{iyX1} with the grid operators for λ = s
    const auto ops = jordan_schwinger(grid, {static_cast<double>(s)});
    const CMatrix u = numerics::expm(Complex(0.0, t) * ops.x0) * numerics::expm(Complex(0.0, y) * ops.xk[0]);
    const auto via_ops = u * std::span<const Complex>(psi);
    double err = 0.0, peak = 0.0;
    for (std::size_t j = 0; j < nodes.size(); ++j) {
      err = std::max(err, std::abs(via_ops[j] - image[j]));
      peak = std::max(peak, std::abs(image[j]));
    }
    EXPECT_LT(err / peak, 1e-6) << "ray " << s;
  }
  EXPECT_THROW(ray_restriction(f, nodes, 0), PreconditionError);
}

TEST(ActL0F, FourierIntertwiner) {
  const std::vector<GridAxis> axes{{-12.0, 12.0, 192}};
  const auto psi = SampledField::sample(axes, [](std::span<const double> x) {
    return std::exp(-(x[0] - 0.3) * (x[0] - 0.3) / 2.0);
  });
  const std::vector<std::vector<double>> ks{{0.3}, {-0.7}, {1.1}, {-1.9}, {2.4}};
  for (const auto& g : {SplitElement(0.25, {0.4}), SplitElement(-0.3, {-0.6})})
    for (double omega : {0.0, 0.8, -1.5}) EXPECT_LT(fourier_intertwiner_deviation(omega, psi, g, ks), 1e-5);
  EXPECT_THROW(fourier_intertwiner_deviation(0.5, psi, SplitElement(0.1, {0.1}), {{0.0}}), PreconditionError);
}

TEST(ActL0F, FourierTransformOfGaussian) {
  const std::vector<GridAxis> axes{{-12.0, 12.0, 241}};
  const auto psi = SampledField::sample(axes, [](std::span<const double> x) { return std::exp(-x[0] * x[0] / 2.0); });
  for (double k : {0.0, 0.5, 1.7}) {
    const std::vector<double> kv{k};
    EXPECT_NEAR(std::abs(fourier_transform(psi, kv) - std::sqrt(2 * kPi) * std::exp(-k * k / 2)), 0.0, 1e-12);
  }
}

TEST(Mellin, GammaIntegral) {
  const auto f = [](double t) { return Complex(std::exp(-t), 0.0); };
  EXPECT_NEAR(std::abs(mellin(f, -1.0) - 1.0), 0.0, 1e-10);
  // ∫ e^{−t} t^{−σ−1} dt = Γ(−σ); Γ(1/2) = √π and Γ(3) = 2
  EXPECT_NEAR(std::abs(mellin(f, -0.5) - std::sqrt(kPi)), 0.0, 1e-10);
  EXPECT_NEAR(std::abs(mellin(f, -3.0) - 2.0), 0.0, 1e-10);
  const Complex g = mellin(f, Complex(-1.0, 2.0));
  // Γ(1 − 2i) via Γ(1 + z) = zΓ(z) and |Γ(1 + iy)|² = πy/sinh(πy)
  EXPECT_NEAR(std::norm(g), 2 * kPi / std::sinh(2 * kPi), 1e-12);
}

TEST(Mellin, ScalingCovariance) {
  const auto f = [](double t) { return Complex(std::exp(-t * t) * (1.0 + t), 0.0); };
  const double a = 1.8;
  for (Complex sigma : {Complex(-0.5, 0.0), Complex(-1.2, 3.0)}) {
    const Complex lhs = mellin([&](double t) { return f(a * t); }, sigma);
    EXPECT_LT(std::abs(lhs - std::pow(a, sigma) * mellin(f, sigma)), 1e-10 * std::abs(lhs));
  }
}

TEST(Mellin, RoundTripGaussian) {
  const double c = -0.5;
  const auto f = [](double t) { return Complex(std::exp(-(t - 1.2) * (t - 1.2)), 0.0); };
  const auto m = [&](Complex sigma) { return mellin(f, sigma); };
  for (double t : {1.0, 0.6, 1.9}) EXPECT_NEAR(std::abs(inverse_mellin(m, c, t) - f(t)), 0.0, 1e-6) << "t " << t;
  EXPECT_THROW(inverse_mellin(m, c, 0.0), PreconditionError);
}

TEST(Mellin, DivergentIntegrandThrows) {
  // t^{−σ−1} with σ = 0.5 grows like t^{−3/2} at 0 against a constant f
  EXPECT_THROW(mellin([](double) { return Complex(1.0, 0.0); }, 0.5), ConvergenceError);
  EXPECT_THROW(mellin([](double t) { return Complex(std::exp(-t), 0.0); }, 0.5), ConvergenceError);
}
