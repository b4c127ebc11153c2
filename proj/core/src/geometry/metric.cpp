#include "kfuzzy/geometry/metric.hpp"

#include <cmath>
#include <numbers>

#include "kfuzzy/errors.hpp"
#include "kfuzzy/numerics/linalg.hpp"

namespace kfuzzy::geometry {

namespace {

numerics::HermitianEigen symmetric_eigen(const RealMatrix& m) {
  numerics::CMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j);
  return numerics::eig_hermitian(c);
}

SplitElement displaced(const SplitElement& p, std::size_t axis, double delta) {
  double t = p.t();
  std::vector<double> y(p.y().begin(), p.y().end());
  if (axis == 0) {
    t += delta;
  } else {
    y[axis - 1] += delta;
  }
  return SplitElement(t, std::move(y));
}

}  // namespace

MetricSpec::MetricSpec(RealMatrix g, const Tolerances& tol) : g_(std::move(g)) {
  const std::size_t d = g_.rows();
  if (d < 2 || g_.cols() != d) throw DimensionError("MetricSpec: G must be square with D >= 2");
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      if (!std::isfinite(g_(i, j))) throw InputError("MetricSpec: non-finite entry");
      if (std::abs(g_(i, j) - g_(j, i)) > 1e-12 * std::max(1.0, g_.max_abs()))
        throw PreconditionError("MetricSpec: G must be symmetric");
    }
  const auto eig = symmetric_eigen(g_);
  det_ = 1.0;
  for (double l : eig.values) {
    det_ *= l;
    if (l > 0) ++n_plus_;
    if (l < 0) ++n_minus_;
  }
  if (std::abs(det_) <= tol.degenerate_det) throw PreconditionError("MetricSpec: G is degenerate");
}

MetricSpec MetricSpec::planar(int dim) {
  std::vector<double> d(static_cast<std::size_t>(dim), -1.0);
  d[0] = 1.0;
  return MetricSpec(RealMatrix::diagonal(d));
}

RealMatrix metric_at(const MetricSpec& spec, const SplitElement& p) {
  if (spec.dim() != p.dim()) throw DimensionError("metric_at: dimension mismatch");
  const FramePoint f = frame_at(p, FrameSide::Right);
  return f.forms.transpose() * spec.g() * f.forms;
}

RealMatrix planar_metric(const SplitElement& p, double sigma) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  RealMatrix m(d, d);
  m(0, 0) = 1.0;
  const double e2t = std::exp(2.0 * p.t());
  for (std::size_t k = 1; k < d; ++k) m(k, k) = sigma * e2t;
  return m;
}

double killing_deviation(const MetricSpec& spec, FrameSide fields, const SplitElement& p, double h) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const RealMatrix g = metric_at(spec, p);
  std::vector<RealMatrix> dg(d);  // dg[c](a, b) = ∂_c g_ab
  for (std::size_t c = 0; c < d; ++c) {
    const RealMatrix gp = metric_at(spec, displaced(p, c, h));
    const RealMatrix gm = metric_at(spec, displaced(p, c, -h));
    dg[c] = (1.0 / (2.0 * h)) * (gp - gm);
  }
  double worst = 0.0;
  for (int mu = 0; mu < static_cast<int>(d); ++mu) {
    const VectorField x = frame_field(fields, mu);
    const auto xv = x(p);
    RealMatrix jx(d, d);  // jx(c, a) = ∂_a X^c
    for (std::size_t a = 0; a < d; ++a) {
      const auto xp = x(displaced(p, a, h)), xm = x(displaced(p, a, -h));
      for (std::size_t c = 0; c < d; ++c) jx(c, a) = (xp[c] - xm[c]) / (2.0 * h);
    }
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) {
        double l = 0.0;
        for (std::size_t c = 0; c < d; ++c) l += xv[c] * dg[c](a, b) + g(c, b) * jx(c, a) + g(a, c) * jx(c, b);
        worst = std::max(worst, std::abs(l));
      }
  }
  return worst / g.max_abs();
}

std::pair<double, double> Reduction2D::apply(double tau, double x) const {
  const double r = std::sqrt(std::abs(scale));
  const double s = std::sin(2.0 * theta);
  return {tau / r, x * r + branch * tau * s / r};
}

RealMatrix Reduction2D::jacobian() const {
  const double r = std::sqrt(std::abs(scale));
  const double s = std::sin(2.0 * theta);
  return RealMatrix{{1.0 / r, 0.0}, {branch * s / r, r}};
}

Reduction2D reduce_metric_2d(double theta) {
  const double pi = std::numbers::pi;
  if (!(theta > -pi / 4 && theta <= 3 * pi / 4)) throw PreconditionError("reduce_metric_2d: θ must lie in (−π/4, 3π/4]");
  const double c = std::cos(2.0 * theta);
  if (std::abs(c) < 1e-12) throw PreconditionError("reduce_metric_2d: cos 2θ = 0, the metric is flat");
  return Reduction2D{theta, c, c > 0 ? -1.0 : 1.0};
}

RealMatrix family_metric_2d(double theta, double tau, double) {
  const double c = std::cos(2.0 * theta), s = std::sin(2.0 * theta), w = 1.0 / (tau * tau);
  return RealMatrix{{c * w, s * w}, {s * w, -c * w}};
}

RealMatrix planar_metric_tau(double tau, double) {
  const double w = 1.0 / (tau * tau);
  return RealMatrix{{w, 0.0}, {0.0, -w}};
}

SplitElement ReductionMap::apply(const SplitElement& p) const {
  const std::size_t n = static_cast<std::size_t>(dim) - 1;
  const double emt = std::exp(-p.t());
  std::vector<double> y(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) y[i] += a(i, j) * p.y(j);
    y[i] += b[i] * emt;
  }
  return SplitElement(p.t(), std::move(y));
}

RealMatrix ReductionMap::jacobian(const SplitElement& p) const {
  const std::size_t d = static_cast<std::size_t>(dim);
  const double emt = std::exp(-p.t());
  RealMatrix j(d, d);
  j(0, 0) = 1.0;
  for (std::size_t i = 1; i < d; ++i) {
    j(i, 0) = -b[i - 1] * emt;
    for (std::size_t k = 1; k < d; ++k) j(i, k) = a(i - 1, k - 1);
  }
  return j;
}

ReductionMap reduce_metric_general(const MetricSpec& spec, const ReductionOptions& opts) {
  const int d = spec.dim();
  const std::size_t n = static_cast<std::size_t>(d) - 1;
  if (opts.euclidean) {
    if (spec.n_plus() != d) throw PreconditionError("reduce_metric_general: Euclidean variant needs a positive definite G");
  } else if (!spec.lorentzian()) {
    throw PreconditionError("reduce_metric_general: G must have Lorentzian signature (1, D-1)");
  }
  const double sigma = opts.euclidean ? 1.0 : -1.0;
  const RealMatrix& g = spec.g();
  RealMatrix gss(n, n);
  std::vector<double> g0(n);
  for (std::size_t i = 0; i < n; ++i) {
    g0[i] = g(0, i + 1);
    for (std::size_t j = 0; j < n; ++j) gss(i, j) = g(i + 1, j + 1);
  }
  const auto eig = symmetric_eigen(gss);
  for (double l : eig.values)
    if (std::abs(l) < 1e-14 * std::max(1.0, g.max_abs()))
      throw PreconditionError("reduce_metric_general: spatial block is singular");

  ReductionMap m;
  m.dim = d;
  m.sigma = sigma;
  m.rotation = RealMatrix(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    // real symmetric input: the Jacobi vectors are real up to a unit phase; fix it so the
    // largest component is positive (planar input then gives R = I)
    std::size_t big = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(eig.vectors(i, j)) > std::abs(eig.vectors(big, j))) big = i;
    const numerics::Complex phase = std::abs(eig.vectors(big, j)) / eig.vectors(big, j);
    for (std::size_t i = 0; i < n; ++i) m.rotation(i, j) = (eig.vectors(i, j) * phase).real();
  }

  // c = −G_ss⁻¹ G_0 via the eigendecomposition; s = G_00 − G_0ᵀ G_ss⁻¹ G_0
  std::vector<double> proj(n, 0.0);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i) proj[k] += m.rotation(i, k) * g0[i];
  m.shear.assign(n, 0.0);
  double quad = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    quad += proj[k] * proj[k] / eig.values[k];
    for (std::size_t i = 0; i < n; ++i) m.shear[i] -= m.rotation(i, k) * proj[k] / eig.values[k];
  }
  const double schur = g(0, 0) - quad;
  if (std::abs(schur) < 1e-14 * std::max(1.0, g.max_abs()))
    throw PreconditionError("reduce_metric_general: degenerate time direction");
  m.scale = 1.0 / schur;

  m.scalings.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double v = sigma * m.scale * eig.values[k];
    if (!(v > 0.0))
      throw PreconditionError(
          "reduce_metric_general: spatial block has the wrong sign pattern for a planar form "
          "(for Lorentzian D >= 3 the spatial block must be negative definite)");
    m.scalings[k] = std::sqrt(v);
  }
  m.a = RealMatrix(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.a(i, j) = m.scalings[i] * m.rotation(j, i);
  m.b.assign(n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.b[i] += m.a(i, j) * m.shear[j];
  return m;
}

double reduction_residual(const MetricSpec& spec, const ReductionMap& map, const std::vector<SplitElement>& points) {
  double worst = 0.0;
  for (const auto& p : points) {
    const RealMatrix j = map.jacobian(p);
    const RealMatrix pulled = j.transpose() * planar_metric(map.apply(p), map.sigma) * j;
    const RealMatrix target = map.scale * metric_at(spec, p);
    worst = std::max(worst, relative_max_diff(pulled, target));
  }
  return worst;
}

}  // namespace kfuzzy::geometry
