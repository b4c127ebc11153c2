#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/geometry/embedding.hpp"
#include "kfuzzy/geometry/frames.hpp"
#include "kfuzzy/geometry/laplace.hpp"
#include "kfuzzy/geometry/metric.hpp"

using namespace kfuzzy;
using namespace kfuzzy::geometry;

namespace {

const double kE = std::numbers::e;
const double kPi = std::numbers::pi;

SplitElement random_point(int dim, std::mt19937_64& rng, double range) {
  std::uniform_real_distribution<double> u(-range, range);
  std::vector<double> y(static_cast<std::size_t>(dim - 1));
  for (auto& v : y) v = u(rng);
  return SplitElement(u(rng), y);
}

// Coordinate metric of G_{μν}θ^μθ^ν with θ⁰ = dt, θᵏ = eᵗdyᵏ, written out entry by entry.
RealMatrix metric_oracle(const RealMatrix& g, const SplitElement& p) {
  const std::size_t d = g.rows();
  RealMatrix out(d, d);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b)
      out(a, b) = g(a, b) * (a == 0 ? 1.0 : std::exp(p.t())) * (b == 0 ? 1.0 : std::exp(p.t()));
  return out;
}

RealMatrix planar_oracle(const SplitElement& p) {
  const auto d = static_cast<std::size_t>(p.dim());
  RealMatrix out(d, d);
  out(0, 0) = 1.0;
  for (std::size_t k = 1; k < d; ++k) out(k, k) = -std::exp(2.0 * p.t());
  return out;
}

// Jᵀ P(map(p)) J with J from central differences of map.apply.
RealMatrix numeric_pullback(const ReductionMap& map, const SplitElement& p) {
  const auto d = static_cast<std::size_t>(p.dim());
  const double h = 1e-5;
  RealMatrix j(d, d);
  for (std::size_t b = 0; b < d; ++b) {
    auto shifted = [&](double s) {
      double t = p.t();
      std::vector<double> y(p.y().begin(), p.y().end());
      if (b == 0) t += s; else y[b - 1] += s;
      const auto q = map.apply(SplitElement(t, y));
      std::vector<double> c{q.t()};
      c.insert(c.end(), q.y().begin(), q.y().end());
      return c;
    };
    const auto plus = shifted(h), minus = shifted(-h);
    for (std::size_t a = 0; a < d; ++a) j(a, b) = (plus[a] - minus[a]) / (2.0 * h);
  }
  return j.transpose() * planar_oracle(map.apply(p)) * j;
}

RealMatrix random_reducible(int dim, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const auto d = static_cast<std::size_t>(dim);
  const std::size_t n = d - 1;
  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) a(i, k) = u(rng);
  RealMatrix gss = a.transpose() * a;
  for (std::size_t i = 0; i < n; ++i) gss(i, i) += 0.1;
  std::vector<double> c(n);
  for (auto& v : c) v = u(rng);
  RealMatrix g(d, d);
  double cgc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double g0 = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      g(i + 1, k + 1) = -gss(i, k);
      g0 += gss(i, k) * c[k];
      cgc -= c[i] * gss(i, k) * c[k];
    }
    g(0, i + 1) = g(i + 1, 0) = g0;
  }
  g(0, 0) = cgc + 0.2 + 0.8 * (0.5 * (u(rng) + 1.0));
  return g;
}

}  // namespace

TEST(Frames, CoframeExamples) {
  const auto f0 = frame_at(SplitElement(0.0, {0.4}), FrameSide::Right);
  EXPECT_DOUBLE_EQ(f0.forms(1, 1), 1.0);
  EXPECT_DOUBLE_EQ(f0.forms(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(f0.forms(1, 0), 0.0);
  const auto f1 = frame_at(SplitElement(1.0, {0.4}), FrameSide::Right);
  EXPECT_NEAR(f1.forms(1, 1), kE, 1e-15);
  EXPECT_NEAR(f1.fields(1, 1), 1.0 / kE, 1e-15);
  const auto l = frame_at(SplitElement(1.0, {0.4, -0.3}), FrameSide::Left);
  EXPECT_DOUBLE_EQ(l.forms(1, 0), 0.4);
  EXPECT_DOUBLE_EQ(l.fields(0, 2), 0.3);
}

TEST(Frames, FormsAreDualToFields) {
  std::mt19937_64 rng(11);
  for (int dim : {2, 3, 4})
    for (auto side : {FrameSide::Right, FrameSide::Left}) {
      const auto f = frame_at(random_point(dim, rng, 2.0), side);
      const auto id = f.forms * f.fields.transpose();
      EXPECT_LT(relative_max_diff(id, RealMatrix::identity(static_cast<std::size_t>(dim)), 1.0), 1e-14);
    }
}

TEST(Frames, BracketsMatchStructureConstants) {
  std::mt19937_64 rng(12);
  for (int dim : {2, 3, 4})
    for (int i = 0; i < 20; ++i) {
      const auto p = random_point(dim, rng, 2.0);
      EXPECT_LT(bracket_check(FrameSide::Right, p, 1e-4).max_deviation, 1e-6);
      EXPECT_LT(bracket_check(FrameSide::Left, p, 1e-4).max_deviation, 1e-6);
    }
  // abelian ideal: [e_1, e_2] = 0 exactly up to stencil error
  const auto b = lie_bracket(frame_field(FrameSide::Right, 1), frame_field(FrameSide::Right, 2),
                             SplitElement(0.7, {0.2, -0.1}), 1e-4);
  for (double v : b) EXPECT_LT(std::abs(v), 1e-8);
  EXPECT_THROW(bracket_check(FrameSide::Right, SplitElement(0.0, {0.0}), 0.5), PreconditionError);
}

TEST(Metric, PlanarExamples) {
  const auto spec = MetricSpec::planar(2);
  EXPECT_TRUE(spec.lorentzian());
  const auto g0 = metric_at(spec, SplitElement(0.0, {0.3}));
  EXPECT_DOUBLE_EQ(g0(0, 0), 1.0);
  EXPECT_DOUBLE_EQ(g0(1, 1), -1.0);
  EXPECT_DOUBLE_EQ(g0(0, 1), 0.0);
  const auto g1 = metric_at(spec, SplitElement(1.0, {0.3}));
  EXPECT_NEAR(g1(1, 1), -kE * kE, 1e-14);
  EXPECT_LT(relative_max_diff(planar_metric(SplitElement(1.0, {0.3})), g1, 1.0), 1e-15);
}

TEST(Metric, MatchesCoframeOracle) {
  std::mt19937_64 rng(13);
  for (int dim : {2, 3, 4})
    for (int i = 0; i < 10; ++i) {
      const auto g = random_reducible(dim, rng);
      const auto p = random_point(dim, rng, 1.5);
      EXPECT_LT(relative_max_diff(metric_at(MetricSpec(g), p), metric_oracle(g, p), 1.0), 1e-14);
    }
}

TEST(Metric, InputValidation) {
  EXPECT_THROW(MetricSpec(RealMatrix{{1.0, 0.2}, {0.3, -1.0}}), PreconditionError);
  EXPECT_THROW(MetricSpec(RealMatrix{{1.0, 1.0}, {1.0, 1.0}}), PreconditionError);
  EXPECT_THROW(MetricSpec(RealMatrix{{1.0}}), DimensionError);
  EXPECT_THROW(MetricSpec(RealMatrix{{1.0, NAN}, {NAN, -1.0}}), InputError);
  EXPECT_THROW(metric_at(MetricSpec::planar(3), SplitElement(0.0, {0.0})), DimensionError);
  const MetricSpec ads(RealMatrix::diagonal({-1.0, 1.0, -1.0}));
  EXPECT_EQ(ads.n_plus(), 1);
  EXPECT_EQ(ads.n_minus(), 2);
}

TEST(Metric, LeftFieldsAreKilling) {
  std::mt19937_64 rng(14);
  double left = 0.0, right = 0.0;
  for (int dim : {2, 3, 4})
    for (int i = 0; i < 10; ++i) {
      const MetricSpec spec(random_reducible(dim, rng));
      const auto p = random_point(dim, rng, 1.0);
      left = std::max(left, killing_deviation(spec, FrameSide::Left, p, 1e-4));
      right = std::max(right, killing_deviation(spec, FrameSide::Right, p, 1e-4));
    }
  EXPECT_LT(left, 1e-6);
  // A right-invariant metric is not preserved by the right-invariant fields.
  EXPECT_GT(right, 1e-2);
}

TEST(Reduction2D, ThetaZeroIsIdentity) {
  const auto r = reduce_metric_2d(0.0);
  EXPECT_DOUBLE_EQ(r.scale, 1.0);
  for (auto [tau, x] : {std::pair{0.5, 0.3}, {2.0, -1.0}}) {
    const auto [tp, xp] = r.apply(tau, x);
    EXPECT_NEAR(tp, tau, 1e-15);
    EXPECT_NEAR(xp, x, 1e-15);
  }
  // dτ²−dx² over τ² is dt²−e^{2t}dx² under τ = e^{−t}
  const double t = 0.4, tau = std::exp(-t);
  const auto fam = family_metric_2d(0.0, tau, 0.2);
  EXPECT_NEAR(fam(0, 0) * tau * tau, 1.0, 1e-15);
  EXPECT_NEAR(fam(1, 1) * tau * tau, -1.0, 1e-15);
}

TEST(Reduction2D, ThetaHalfPiFlipsSign) {
  const auto r = reduce_metric_2d(kPi / 2);
  EXPECT_NEAR(r.scale, -1.0, 1e-15);
  const auto [tp, xp] = r.apply(0.7, -0.4);
  EXPECT_NEAR(tp, 0.7, 1e-15);
  EXPECT_NEAR(xp, -0.4, 1e-15);
}

TEST(Reduction2D, NumericPullback) {
  std::mt19937_64 rng(15);
  std::uniform_real_distribution<double> tau_d(0.3, 3.0), x_d(-2.0, 2.0);
  for (double theta : {kPi / 8, 0.6, 2.0, -0.5, 1.2}) {
    const auto r = reduce_metric_2d(theta);
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
      const double tau = tau_d(rng), x = x_d(rng), h = 1e-5;
      RealMatrix j(2, 2);
      const auto a = r.apply(tau + h, x), b = r.apply(tau - h, x), c = r.apply(tau, x + h), d = r.apply(tau, x - h);
      j(0, 0) = (a.first - b.first) / (2 * h);
      j(1, 0) = (a.second - b.second) / (2 * h);
      j(0, 1) = (c.first - d.first) / (2 * h);
      j(1, 1) = (c.second - d.second) / (2 * h);
      const double tp = r.apply(tau, x).first;
      const RealMatrix target{{1.0 / (tp * tp), 0.0}, {0.0, -1.0 / (tp * tp)}};
      const double c2 = std::cos(2 * theta), s2 = std::sin(2 * theta);
      const RealMatrix source{{c2 / (tau * tau), s2 / (tau * tau)}, {s2 / (tau * tau), -c2 / (tau * tau)}};
      worst = std::max(worst, relative_max_diff(j.transpose() * target * j, r.scale * source));
      EXPECT_LT(relative_max_diff(r.jacobian(), j), 1e-9);
    }
    EXPECT_LT(worst, 1e-9) << "theta " << theta;
  }
}

TEST(Reduction2D, FlatAndOutOfRangeThrow) {
  EXPECT_THROW(reduce_metric_2d(kPi / 4), PreconditionError);
  EXPECT_THROW(reduce_metric_2d(3 * kPi / 4), PreconditionError);
  EXPECT_THROW(reduce_metric_2d(-kPi / 4), PreconditionError);
  EXPECT_THROW(reduce_metric_2d(3.0), PreconditionError);
}

TEST(ReductionGeneral, PlanarIsIdentity) {
  for (int dim : {2, 3, 4}) {
    const auto map = reduce_metric_general(MetricSpec::planar(dim));
    EXPECT_NEAR(map.scale, 1.0, 1e-15);
    const SplitElement p(0.3, std::vector<double>(static_cast<std::size_t>(dim - 1), -0.2));
    const auto q = map.apply(p);
    EXPECT_NEAR(q.t(), p.t(), 1e-15);
    for (std::size_t k = 0; k + 1 < static_cast<std::size_t>(dim); ++k) EXPECT_NEAR(std::abs(q.y(k)), 0.2, 1e-15);
  }
}

TEST(ReductionGeneral, SingleOffDiagonal) {
  RealMatrix g = RealMatrix::diagonal({1.0, -1.0, -1.0});
  g(0, 1) = g(1, 0) = 0.3;
  const MetricSpec spec(g);
  const auto map = reduce_metric_general(spec);
  std::mt19937_64 rng(16);
  std::vector<SplitElement> pts;
  for (int i = 0; i < 20; ++i) pts.push_back(random_point(3, rng, 1.0));
  EXPECT_LT(reduction_residual(spec, map, pts), 1e-9);
  for (const auto& p : pts)
    EXPECT_LT(relative_max_diff(numeric_pullback(map, p), map.scale * metric_oracle(g, p)), 1e-8);
}

TEST(ReductionGeneral, RandomLorentzianSweep) {
  std::mt19937_64 rng(17);
  for (int dim : {2, 3, 4})
    for (int i = 0; i < 100; ++i) {
      RealMatrix g;
      if (dim == 2) {
        std::uniform_real_distribution<double> u(-2.0, 2.0);
        do {
          const double off = u(rng);
          g = RealMatrix{{u(rng), off}, {off, u(rng)}};
        } while (g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0) > -0.05);
      } else {
        g = random_reducible(dim, rng);
      }
      const MetricSpec spec(g);
      const auto map = reduce_metric_general(spec);
      std::vector<SplitElement> pts;
      for (int k = 0; k < 5; ++k) pts.push_back(random_point(dim, rng, 1.0));
      EXPECT_LT(reduction_residual(spec, map, pts), 1e-9);
      if (i < 10) {
        EXPECT_LT(relative_max_diff(numeric_pullback(map, pts[0]), map.scale * metric_oracle(g, pts[0])), 1e-7);
      }
    }
}

TEST(ReductionGeneral, Preconditions) {
  // anti-de Sitter-like signature with a spatial block of mixed sign
  EXPECT_THROW(reduce_metric_general(MetricSpec(RealMatrix::diagonal({-1.0, 1.0, -1.0}))), PreconditionError);
  EXPECT_THROW(reduce_metric_general(MetricSpec(RealMatrix::diagonal({1.0, 1.0, -1.0}))), PreconditionError);
  ReductionOptions euclid;
  euclid.euclidean = true;
  EXPECT_THROW(reduce_metric_general(MetricSpec::planar(3), euclid), PreconditionError);
  const MetricSpec pos(RealMatrix::diagonal({1.0, 2.0, 0.5}));
  const auto map = reduce_metric_general(pos, euclid);
  EXPECT_LT(reduction_residual(pos, map, {SplitElement(0.2, {0.1, -0.3}), SplitElement(-0.5, {1.0, 0.4})}), 1e-9);
}

TEST(Embedding, PolePointAndQuadric) {
  const auto x = embed(SplitElement::identity(3));
  ASSERT_EQ(x.size(), 4u);
  EXPECT_DOUBLE_EQ(x[0], 0.0);
  EXPECT_DOUBLE_EQ(x[1], 0.0);
  EXPECT_DOUBLE_EQ(x[2], 0.0);
  EXPECT_DOUBLE_EQ(x[3], 1.0);
  std::mt19937_64 rng(18);
  for (int dim : {2, 3, 4})
    for (int i = 0; i < 200; ++i) {
      const auto p = random_point(dim, rng, 1.5);
      const auto e = embed(p);
      EXPECT_LT(std::abs(quadric_residual(e)), 1e-12 * std::max(1.0, e[0] * e[0]));
      EXPECT_NEAR(half_space_witness(e), std::exp(p.t()), 1e-12 * std::exp(p.t()));
    }
}

TEST(Embedding, InducedMetricMatchesNumericOracle) {
  std::mt19937_64 rng(19);
  for (int dim : {2, 3}) {
    for (int i = 0; i < 20; ++i) {
      const auto p = random_point(dim, rng, 1.0);
      const auto d = static_cast<std::size_t>(dim);
      RealMatrix j(d + 1, d);
      const double h = 1e-5;
      for (std::size_t b = 0; b < d; ++b) {
        auto at = [&](double s) {
          double t = p.t();
          std::vector<double> y(p.y().begin(), p.y().end());
          if (b == 0) t += s; else y[b - 1] += s;
          return embed(SplitElement(t, y));
        };
        const auto a = at(h), c = at(-h);
        for (std::size_t r = 0; r <= d; ++r) j(r, b) = (a[r] - c[r]) / (2 * h);
      }
      std::vector<double> eta(d + 1, -1.0);
      eta[0] = 1.0;
      const auto g = j.transpose() * RealMatrix::diagonal(eta) * j;
      EXPECT_LT(relative_max_diff(g, planar_oracle(p), 1.0), 1e-8);
      EXPECT_LT(relative_max_diff(induced_metric(p), planar_oracle(p), 1.0), 1e-13);
    }
  }
}

TEST(Embedding, AlternateSignsLeaveTheHyperboloid) {
  EXPECT_LT(std::abs(quadric_residual(embed_alternate_signs(SplitElement(0.5, {0.0})))), 1e-14);
  EXPECT_GT(std::abs(quadric_residual(embed_alternate_signs(SplitElement(0.5, {0.8})))), 0.1);
}

TEST(Laplace, ConstantHasZeroResidual) {
  const std::vector<GridAxis> axes{{-1.0, 1.0, 33}, {-1.0, 1.0, 33}};
  const auto f = GridFunction::sample(axes, [](const SplitElement&) { return Complex(2.0, -1.0); });
  EXPECT_LT(laplace_apply(f, 0.0).max_abs(), 1e-12);
}

TEST(Laplace, PlaneWaveResidualIsSpatialTerm) {
  // f = e^{iλy} has f_t = 0 and Δf = −λ²f, so the residual is (μ² + λ²e^{−2t}) f.
  const double lambda = 1.3;
  const Complex mu2(0.16, 0.0);
  const std::vector<GridAxis> axes{{-1.0, 1.0, 65}, {-1.0, 1.0, 257}};
  const auto f = GridFunction::sample(axes, [&](const SplitElement& g) { return std::exp(Complex(0, lambda * g.y(0))); });
  const auto r = laplace_apply(f, mu2);
  double err = 0.0;
  const auto shape = f.shape();
  for (std::size_t i = 0; i < f.size(); ++i) {
    const auto idx = f.multi_index(i);
    if (idx[1] < 2 || idx[1] + 2 >= shape[1]) continue;
    const auto p = f.point(i);
    const Complex expect = (mu2 + lambda * lambda * std::exp(-2 * p.t())) * f.values()[i];
    err = std::max(err, std::abs(r.residual.values()[i] - expect));
  }
  EXPECT_LT(err, 1e-6);
}

TEST(Laplace, ClassicalModeSolvesEquation) {
  const std::vector<GridAxis> axes{{-1.0, 1.0, 512}, {-1.0, 1.0, 512}};
  ClassicalMode m;
  m.dim = 2;
  m.mu2 = 0.16;
  m.lambda = {1.0};
  EXPECT_NEAR(m.nu().real(), 0.3, 1e-15);
  const auto f = classical_mode_grid(m, axes);
  EXPECT_LT(laplace_apply(f, m.mu2).relative(), 1e-6);
  LaplaceOptions plus;
  plus.spatial = SpatialFactor::ExpPlus2t;
  EXPECT_GT(laplace_apply(f, m.mu2, plus).relative(), 1e-2);
  LaplaceOptions second;
  second.accuracy = 2;
  EXPECT_LT(laplace_apply(f, m.mu2, second).relative(), 1e-4);
}

TEST(Laplace, ClassicalModeThreeDimensions) {
  const GridAxis fine{-1.0, 1.0, 256};
  const double h = fine.step();
  const std::vector<GridAxis> axes{fine, fine, {-7.5 * h, 7.5 * h, 16}};
  ClassicalMode m;
  m.dim = 3;
  m.mu2 = ClassicalMode::mu2_for_order(3, Complex(0.0, 0.4));
  m.lambda = {0.7, 0.7};
  EXPECT_NEAR(m.mu2.real(), 1.16, 1e-14);
  EXPECT_LT(laplace_apply(classical_mode_grid(m, axes), m.mu2).relative(), 1e-6);
}

TEST(Laplace, SmallGridThrows) {
  const std::vector<GridAxis> axes{{-1.0, 1.0, 4}, {-1.0, 1.0, 33}};
  const auto f = GridFunction::zeros(axes);
  EXPECT_THROW(laplace_apply(f, 0.0), DimensionError);
  LaplaceOptions second;
  second.accuracy = 2;
  EXPECT_NO_THROW(laplace_apply(f, 0.0, second));
}

TEST(ClassicalMode, HalfIntegerClosedForm) {
  // μ = 0 in D = 2 gives ν = 1/2 and H_{1/2}(x) = −i√(2/(πx))e^{ix}; the e^{−t/2} prefactor cancels.
  ClassicalMode m;
  m.lambda = {1.7};
  EXPECT_NEAR(std::abs(m.nu() - Complex(0.5, 0.0)), 0.0, 1e-15);
  std::mt19937_64 rng(20);
  for (int i = 0; i < 20; ++i) {
    const auto p = random_point(2, rng, 1.5);
    const double l = 1.7;
    const Complex expect = Complex(0, -1) * std::sqrt(2 / (kPi * l)) * std::exp(Complex(0, l * p.y(0))) *
                           std::exp(Complex(0, l * std::exp(-p.t())));
    EXPECT_LT(std::abs(classical_mode(m, p) - expect), 1e-13);
  }
}

TEST(ClassicalMode, KindsAreConjugateForRealOrder) {
  ClassicalMode a;
  a.mu2 = 0.16;
  a.lambda = {0.8};
  ClassicalMode b = a;
  b.kind = 2;
  b.lambda = {-0.8};
  const SplitElement p(0.3, {0.45});
  EXPECT_LT(std::abs(classical_mode(b, p) - std::conj(classical_mode(a, p))), 1e-14);
}

TEST(ClassicalMode, Errors) {
  ClassicalMode m;
  m.lambda = {0.0};
  EXPECT_THROW(classical_mode(m, SplitElement(0.0, {0.0})), DegenerateModeError);
  m.lambda = {1.0, 0.0};
  EXPECT_THROW(classical_mode(m, SplitElement(0.0, {0.0})), DimensionError);
  m.lambda = {1.0};
  m.kind = 3;
  EXPECT_THROW(classical_mode(m, SplitElement(0.0, {0.0})), InputError);
}
