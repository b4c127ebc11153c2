#include "kfuzzy/geometry/frames.hpp"

#include <cmath>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::geometry {

FramePoint frame_at(const SplitElement& p, FrameSide side) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  RealMatrix forms(d, d), fields(d, d);
  forms(0, 0) = 1.0;
  fields(0, 0) = 1.0;
  if (side == FrameSide::Right) {
    const double et = std::exp(p.t());
    for (std::size_t k = 1; k < d; ++k) {
      forms(k, k) = et;
      fields(k, k) = 1.0 / et;
    }
  } else {
    for (std::size_t k = 1; k < d; ++k) {
      forms(k, 0) = p.y(k - 1);
      forms(k, k) = 1.0;
      fields(0, k) = -p.y(k - 1);
      fields(k, k) = 1.0;
    }
  }
  return {p, side, std::move(forms), std::move(fields)};
}

VectorField frame_field(FrameSide side, int mu) {
  return [side, mu](const SplitElement& p) {
    const FramePoint f = frame_at(p, side);
    std::vector<double> v(f.fields.cols());
    for (std::size_t a = 0; a < v.size(); ++a) v[a] = f.fields(static_cast<std::size_t>(mu), a);
    return v;
  };
}

namespace {

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

// J(a, b) = ∂_b X^a
RealMatrix jacobian(const VectorField& x, const SplitElement& p, double h) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  RealMatrix j(d, d);
  for (std::size_t b = 0; b < d; ++b) {
    const auto xp = x(displaced(p, b, h));
    const auto xm = x(displaced(p, b, -h));
    for (std::size_t a = 0; a < d; ++a) j(a, b) = (xp[a] - xm[a]) / (2.0 * h);
  }
  return j;
}

}  // namespace

std::vector<double> lie_bracket(const VectorField& x, const VectorField& y, const SplitElement& p, double h) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const auto xv = x(p), yv = y(p);
  const RealMatrix jx = jacobian(x, p, h), jy = jacobian(y, p, h);
  std::vector<double> out(d, 0.0);
  for (std::size_t a = 0; a < d; ++a)
    for (std::size_t b = 0; b < d; ++b) out[a] += xv[b] * jy(a, b) - yv[b] * jx(a, b);
  return out;
}

BracketReport bracket_check(FrameSide side, const SplitElement& p, double h) {
  if (!(h >= 1e-6 && h <= 1e-2)) throw PreconditionError("bracket_check: step must lie in [1e-6, 1e-2]");
  const int d = p.dim();
  const double c = side == FrameSide::Right ? -1.0 : 1.0;
  BracketReport rep;
  for (int mu = 0; mu < d; ++mu) {
    for (int nu = mu + 1; nu < d; ++nu) {
      const auto br = lie_bracket(frame_field(side, mu), frame_field(side, nu), p, h);
      std::vector<double> expected(d, 0.0);
      if (mu == 0) expected = frame_field(side, nu)(p);
      for (auto& v : expected) v *= (mu == 0 ? c : 0.0);
      for (int a = 0; a < d; ++a) {
        const double dev = std::abs(br[a] - expected[a]);
        if (dev > rep.max_deviation) {
          rep.max_deviation = dev;
          rep.worst_mu = mu;
          rep.worst_nu = nu;
        }
      }
    }
  }
  return rep;
}

}  // namespace kfuzzy::geometry
