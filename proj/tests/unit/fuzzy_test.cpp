#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/fuzzy/coherent.hpp"
#include "kfuzzy/fuzzy/laplacian.hpp"
#include "kfuzzy/numerics/linalg.hpp"
#include "kfuzzy/representation/oscillator.hpp"
#include "test_support.hpp"

using namespace kfuzzy;
using namespace kfuzzy::fuzzy;
using namespace kfuzzy::representation;
using kfuzzy::testing::max_abs_diff;
using kfuzzy::testing::random_matrix;

namespace {

const Complex kI(0.0, 1.0);

CoherentFamily qline_family(double half_width, std::size_t m, std::vector<GridAxis> lattice, double center = 0.0) {
  const GridRealization grid(VariableKind::QLine, half_width, m);
  return CoherentFamily::from_grid(grid, gaussian_state(grid, center, 1.0), std::move(lattice));
}

CoherentFamily oscillator_family(std::size_t n, std::vector<GridAxis> lattice) {
  return CoherentFamily::from_operators(jordan_schwinger(OscillatorTruncation(n), {1.0}), oscillator_ground_state(n),
                                        std::move(lattice));
}

double max_diff(const GridFunction& a, const GridFunction& b) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a.values()[i] - b.values()[i]));
  return m;
}

}  // namespace

TEST(InitialState, NormalizationAndProfile) {
  const GridRealization grid(VariableKind::QLine, 10.0, 256);
  const auto phi = gaussian_state(grid, 0.5, 0.8);
  EXPECT_NEAR(numerics::norm2(phi.coefficients), 1.0, 1e-12);
  EXPECT_TRUE(static_cast<bool>(phi.profile.positive));
  const auto osc = oscillator_ground_state(12);
  EXPECT_NEAR(std::abs(osc.coefficients[0]), 1.0, 0.0);
  EXPECT_TRUE(osc.radial);
}

TEST(CoherentState, IdentityGivesInitialState) {
  const auto fam = qline_family(10.0, 256, {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}});
  const auto s = coherent_state(fam, SplitElement::identity(2));
  const auto& phi = fam.initial_state().coefficients;
  double err = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) err = std::max(err, std::abs(s[j] - phi[j]));
  EXPECT_LT(err, 1e-14);
  const auto osc = oscillator_family(16, {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}});
  EXPECT_LT(std::abs(coherent_state(osc, SplitElement::identity(2))[0] - 1.0), 1e-14);
}

TEST(CoherentState, NormPreserved) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  const auto grid = qline_family(12.0, 256, {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}});
  const auto osc = oscillator_family(24, {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}});
  for (int i = 0; i < 20; ++i) {
    const SplitElement g(u(rng), {u(rng)});
    EXPECT_NEAR(numerics::norm2(coherent_state(grid, g)), 1.0, 1e-10);
    EXPECT_NEAR(numerics::norm2(coherent_state(osc, g)), 1.0, 1e-10);
  }
}

TEST(CoherentState, GridGroupCovariance) {
  // (U(t₂, y₂)ψ)(Q) = e^{iy₂e^{Q+t₂}} ψ(Q + t₂); with t₂ a multiple of the grid step the shift is an index shift.
  const GridRealization grid(VariableKind::QLine, 12.0, 256);
  const auto fam = CoherentFamily::from_grid(grid, gaussian_state(grid, -1.0, 1.0), {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}});
  const auto nodes = grid.nodes();
  const std::size_t shift = 7;
  const double t2 = static_cast<double>(shift) * grid.step(), y2 = 0.6;
  const SplitElement g1(0.3, {-0.4}), g2(t2, {y2});
  const auto s1 = coherent_state(fam, g1);
  const auto s21 = coherent_state(fam, group::multiply_split(g2, g1));
  double err = 0.0;
  for (std::size_t j = 0; j + shift < nodes.size(); ++j) {
    const Complex moved = std::exp(kI * y2 * std::exp(nodes[j] + t2)) * s1[j + shift];
    err = std::max(err, std::abs(moved - s21[j]));
  }
  EXPECT_LT(err, 1e-12);
}

TEST(CoherentState, SpectralPathMatchesExpm) {
  const auto fam = oscillator_family(20, {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}});
  for (const auto& g : {SplitElement(0.4, {-0.3}), SplitElement(-0.7, {0.9})}) {
    const auto a = fam.state(g), b = fam.state_expm(g);
    double err = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) err = std::max(err, std::abs(a[j] - b[j]));
    EXPECT_LT(err, 1e-10);
  }
}

TEST(Dequantize, IdentityAndAdjoint) {
  const auto fam = oscillator_family(16, {{-1.0, 1.0, 7}, {-1.5, 1.5, 7}});
  const auto one = dequantize(CMatrix::identity(16), fam);
  for (const auto& v : one.values()) EXPECT_LT(std::abs(v - 1.0), 1e-13);
  std::mt19937_64 rng(32);
  const CMatrix f = random_matrix(16, 16, rng);
  const auto df = dequantize(f, fam);
  const auto dfa = dequantize(f.adjoint(), fam);
  for (std::size_t i = 0; i < df.size(); ++i) EXPECT_LT(std::abs(dfa.values()[i] - std::conj(df.values()[i])), 1e-13);
  const auto dh = dequantize(f + f.adjoint(), fam);
  for (const auto& v : dh.values()) EXPECT_LT(std::abs(v.imag()), 1e-13);
  EXPECT_LT(std::abs(dequantize_at(f, fam, fam.lattice_point(5)) - df.values()[5]), 1e-14);
}

TEST(Dequantize, GeneratorsOnGrid) {
  // U†X0U = X0 + yX1 and U†X1U = e^{−t}X1, with ⟨φ₀|X0|φ₀⟩ = 0 and ⟨φ₀|e^Q|φ₀⟩ = e^{c+1/4} for the unit Gaussian at c.
  // The phase e^{iye^{Q+t}} must stay below the grid Nyquist frequency wherever φ₀ is not negligible.
  const double c = -3.0;
  const auto fam = qline_family(12.0, 2048, {{-0.5, 0.5, 9}, {-1.0, 1.0, 9}}, c);
  const auto& ops = fam.ops();
  const auto d0 = dequantize(ops.x0, fam);
  const auto d1 = dequantize(ops.xk[0], fam);
  const double m1 = std::exp(c + 0.25);
  double e0 = 0.0, e1 = 0.0;
  for (std::size_t i = 0; i < d0.size(); ++i) {
    const auto p = d0.point(i);
    e0 = std::max(e0, std::abs(d0.values()[i] - p.y(0) * m1));
    e1 = std::max(e1, std::abs(d1.values()[i] - std::exp(-p.t()) * m1));
  }
  EXPECT_LT(e0, 1e-10);
  EXPECT_LT(e1, 1e-10);
}

TEST(Star, UnitAssociativityAndAdjoint) {
  const auto fam = oscillator_family(12, {{-1.0, 1.0, 5}, {-1.0, 1.0, 5}});
  std::mt19937_64 rng(33);
  const CMatrix f1 = random_matrix(12, 12, rng), f2 = random_matrix(12, 12, rng), f3 = random_matrix(12, 12, rng);
  const CMatrix id = CMatrix::identity(12);
  EXPECT_LT(max_diff(star(f1, id, fam), dequantize(f1, fam)), 1e-13);
  EXPECT_LT(max_diff(star(id, f1, fam), dequantize(f1, fam)), 1e-13);
  const auto a = star(f1, f2 * f3, fam), b = star(f1 * f2, f3, fam);
  EXPECT_LT(max_diff(a, b) / a.max_abs(), 1e-12);
  const auto lhs = dequantize((f1 * f2).adjoint(), fam);
  const auto rhs = star(f2.adjoint(), f1.adjoint(), fam);
  for (std::size_t i = 0; i < lhs.size(); ++i) EXPECT_LT(std::abs(lhs.values()[i] - rhs.values()[i]), 1e-12);
}

TEST(Comder, IdentityGivesZero) {
  const auto fam = qline_family(8.0, 512, {{-0.5, 0.5, 5}, {-1.0, 1.0, 5}}, -2.0);
  const auto r = comder_check(CMatrix::identity(512), fam, 1e-2);
  EXPECT_LT(r.time_deviation, 1e-12);
  EXPECT_LT(r.space_deviation, 1e-12);
}

TEST(Comder, GeneratorDeviationSmall) {
  const auto fam = qline_family(8.0, 512, {{-0.5, 0.5, 5}, {-1.0, 1.0, 5}}, -2.0);
  EXPECT_LT(comder_check(fam.ops().xk[0], fam, 1e-3).max_deviation(), 1e-4);
}

TEST(Comder, FourthOrderConvergence) {
  const auto fam = qline_family(8.0, 512, {{-0.5, 0.5, 5}, {-1.0, 1.0, 5}}, -2.0);
  const auto& ops = fam.ops();
  const CMatrix f = ops.x0 * ops.xk[0] + ops.xk[0] * ops.x0 + ops.x0 * ops.x0;
  const double d1 = comder_check(f, fam, 0.2).max_deviation();
  const double d2 = comder_check(f, fam, 0.1).max_deviation();
  const double d3 = comder_check(f, fam, 0.05).max_deviation();
  // halving h divides the error by about 2⁴
  EXPECT_GT(d1 / d2, 12.0);
  EXPECT_GT(d2 / d3, 12.0);
  EXPECT_LT(comder_check(f, fam, 1e-3).max_deviation(), 1e-8);
}

TEST(QuantizeLs, RoundTripRecoversMatrix) {
  const std::size_t n = 6;
  const auto fam = oscillator_family(n, {{-1.5, 1.5, 9}, {-2.0, 2.0, 9}});
  std::mt19937_64 rng(34);
  const CMatrix f = random_matrix(n, n, rng);
  const auto r = quantize_ls(dequantize(f, fam), fam);
  EXPECT_EQ(r.rank, n * n);
  EXPECT_LT(max_abs_diff(r.f, f) / f.norm_max(), 1e-6);
  EXPECT_LT(r.residual, 1e-8);
  const auto one = quantize_ls(dequantize(CMatrix::identity(n), fam), fam);
  EXPECT_LT(max_abs_diff(one.f, CMatrix::identity(n)), 1e-6);
}

TEST(QuantizeLs, ConditioningDegradesWithSmallWindow) {
  const std::size_t n = 6;
  std::mt19937_64 rng(35);
  const CMatrix f = random_matrix(n, n, rng);
  double prev = 0.0;
  for (double w : {2.0, 0.5, 0.1}) {
    const auto fam = oscillator_family(n, {{-w, w, 7}, {-w, w, 7}});
    const auto r = quantize_ls(dequantize(f, fam), fam);
    EXPECT_GT(r.condition, prev) << "window " << w;
    prev = r.condition;
  }
  EXPECT_THROW(quantize_ls(dequantize(f, oscillator_family(n, {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}})),
                           oscillator_family(n, {{-1.0, 1.0, 3}, {-1.0, 1.0, 3}})),
               DimensionError);
}

TEST(BOperator, HermitianPositiveAndSectorLocalized) {
  const GridRealization grid(VariableKind::KSpaceRays, 12.0, 256);
  const auto fam = CoherentFamily::from_grid(grid, gaussian_state(grid), {{-1.5, 1.5, 24}, {-3.0, 3.0, 48}});
  BOperatorOptions opts;
  opts.sector.assign(512, false);
  std::fill(opts.sector.begin(), opts.sector.begin() + 256, true);
  const auto r = b_operator(fam, opts);
  EXPECT_LT((r.b - r.b.adjoint()).norm_max(), 1e-12 * r.b.norm_max());
  const auto eig = numerics::eig_hermitian(0.5 * (r.b + r.b.adjoint()));
  EXPECT_GT(eig.values.front(), -1e-12 * eig.values.back());
  EXPECT_LT(r.complement_weight, 1e-3);
  EXPECT_NEAR(r.trace, std::abs(r.b.trace()), 1e-10 * r.trace);
}

TEST(BOperator, OffDiagonalRatioImprovesWithWindow) {
  const GridRealization grid(VariableKind::KSpaceRays, 12.0, 256);
  std::vector<bool> sector(512, false);
  std::fill(sector.begin(), sector.begin() + 256, true);
  const CMatrix h = hermite_test_states(GridRealization(VariableKind::QLine, 12.0, 256), 8);
  CMatrix tests(512, 8);
  for (std::size_t i = 0; i < 256; ++i)
    for (std::size_t j = 0; j < 8; ++j) tests(i, j) = h(i, j);
  double prev = INFINITY;
  for (double s : {0.5, 1.0, 2.0}) {
    const auto nt = static_cast<std::size_t>(48 * s), ny = static_cast<std::size_t>(96 * s);
    const auto fam = CoherentFamily::from_grid(grid, gaussian_state(grid), {{-3.0 * s, 3.0 * s, nt}, {-6.0 * s, 6.0 * s, ny}});
    BOperatorOptions opts;
    opts.assemble = false;
    opts.sector = sector;
    opts.test_states = tests;
    const auto r = b_operator(fam, opts);
    EXPECT_LT(r.offdiag_ratio, prev) << "scale " << s;
    if (s == 1.0) {
      EXPECT_LT(r.offdiag_ratio, 0.2);
    }
    EXPECT_FALSE(r.conditioning_warning);
    prev = r.offdiag_ratio;
  }
}

TEST(FuzzyLaplacian, SuperoperatorMatchesDirectApplication) {
  std::mt19937_64 rng(36);
  for (std::size_t n : {6, 10}) {
    const auto ops = jordan_schwinger(OscillatorTruncation(n), {1.0});
    const CMatrix l = fuzzy_laplacian(ops);
    ASSERT_EQ(l.rows(), n * n);
    const CMatrix f = random_matrix(n, n, rng);
    const CMatrix direct = apply_fuzzy_laplacian(ops, f);
    const auto v = l * f.entries();
    EXPECT_LT(max_abs_diff(unvec(v, n), direct) / direct.norm_max(), 1e-12);
    // direct application written out from the commutators
    const CMatrix c0 = numerics::commutator(ops.x0, f);
    const CMatrix expect = -1.0 * numerics::commutator(ops.x0, c0) - Complex(0.0, 1.0) * c0 +
                           numerics::commutator(ops.xk[0], numerics::commutator(ops.xk[0], f));
    EXPECT_LT(max_abs_diff(direct, expect) / expect.norm_max(), 1e-13);
    EXPECT_LT(apply_fuzzy_laplacian(ops, CMatrix::identity(n)).norm_max(), 1e-12);
  }
}

TEST(FuzzyLaplacian, SecondAdjointSpectrum) {
  // Averaging over X0 and −X0 cancels the first-order term; with X1 dropped what remains is −ad²_{X0}.
  // ad_{X0} is Hermitian in the Hilbert-Schmidt product with eigenvalues pᵢ − pⱼ, so ad² ≥ 0 and −ad² ≤ 0.
  const std::size_t n = 8;
  auto ops = jordan_schwinger(OscillatorTruncation(n), {1.0});
  ops.xk[0] = CMatrix(n, n);
  auto neg = ops;
  neg.x0 = -1.0 * ops.x0;
  const CMatrix ad2 = -0.5 * (fuzzy_laplacian(ops) + fuzzy_laplacian(neg));
  EXPECT_LT((ad2 - ad2.adjoint()).norm_max(), 1e-12 * ad2.norm_max());
  const auto e = numerics::eig_hermitian(0.5 * (ad2 + ad2.adjoint()));
  const auto p = numerics::eig_hermitian(ops.x0).values;
  std::vector<double> expect;
  for (double a : p)
    for (double b : p) expect.push_back((a - b) * (a - b));
  std::sort(expect.begin(), expect.end());
  ASSERT_EQ(e.values.size(), expect.size());
  for (std::size_t k = 0; k < expect.size(); ++k) EXPECT_NEAR(e.values[k], expect[k], 1e-10 * expect.back());
}

TEST(FuzzyLaplacian, EigenpairsSatisfyEquation) {
  const std::size_t n = 16;
  const auto ops = jordan_schwinger(OscillatorTruncation(n), {1.0});
  const auto spec = solve_fuzzy_spectrum(ops);
  ASSERT_EQ(spec.eigen.values.size(), n * n);
  const double scale = fuzzy_laplacian(ops).norm_fro();
  double worst = 0.0;
  for (std::size_t k = 0; k < spec.eigen.values.size(); ++k) {
    const auto v = spec.eigen.vectors.col(k);
    const CMatrix f = unvec(v, n);
    const CMatrix lf = apply_fuzzy_laplacian(ops, f);
    worst = std::max(worst, max_abs_diff(lf, spec.eigen.values[k] * f) / (scale * f.norm_max()));
  }
  EXPECT_LT(worst, 1e-8);
  // the identity is an eigen-matrix with eigenvalue 0
  const auto it = std::min_element(spec.eigen.values.begin(), spec.eigen.values.end(),
                                   [](Complex a, Complex b) { return std::abs(a) < std::abs(b); });
  EXPECT_LT(std::abs(*it), 1e-8 * scale);
}

TEST(FuzzyLaplacian, MemoryGuards) {
  EXPECT_THROW(fuzzy_laplacian(jordan_schwinger(OscillatorTruncation(80), {1.0})), MemoryGuardError);
  const double c = std::sqrt(0.5);
  EXPECT_THROW(fuzzy_laplacian(jordan_schwinger(OscillatorTruncation(13), {c, c})), MemoryGuardError);
  EXPECT_NO_THROW(fuzzy_laplacian(jordan_schwinger(OscillatorTruncation(6), {c, c})));
}

TEST(ModeCompare, ReportInvariants) {
  const std::size_t n = 10;
  const auto ops = jordan_schwinger(OscillatorTruncation(n), {1.0});
  const auto spec = solve_fuzzy_spectrum(ops);
  const auto fam = CoherentFamily::from_operators(ops, oscillator_ground_state(n), {{-0.5, 0.5, 21}, {-1.0, 1.0, 21}});
  ModeCompareOptions opts;
  opts.candidates = 4;
  opts.lambda_points = 60;
  const auto report = mode_compare(spec, fam, opts);
  EXPECT_EQ(report.n, n);
  EXPECT_EQ(report.eigenvalues.size(), n * n);
  ASSERT_FALSE(report.modes.empty());
  EXPECT_LE(report.modes.size(), opts.candidates);
  double best = 0.0;
  for (const auto& m : report.modes) {
    EXPECT_GE(m.overlap, 0.0);
    EXPECT_LE(m.overlap, 1.0 + 1e-12);
    EXPECT_LT(std::abs(m.mu2 + m.eigenvalue), 1e-12 * std::max(1.0, std::abs(m.eigenvalue)));
    EXPECT_LT(std::abs(m.nu * m.nu - (0.25 - m.mu2)), 1e-10 * std::max(1.0, std::abs(m.mu2)));
    EXPECT_GE(m.nu.real(), 0.0);
    EXPECT_EQ(m.matched, m.overlap >= opts.overlap_floor);
    EXPECT_EQ(m.samples.size(), fam.lattice_size());
    best = std::max(best, m.overlap);
  }
  EXPECT_DOUBLE_EQ(report.best_overlap, best);
  EXPECT_GT(report.truncation_deviation, 0.0);
}
