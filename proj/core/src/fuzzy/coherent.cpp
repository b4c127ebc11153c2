#include "kfuzzy/fuzzy/coherent.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::fuzzy {

namespace {

// V diag(e^{i s w}) V† v
CVector apply_phase(const numerics::HermitianEigen& e, double s, const CVector& v) {
  const std::size_t n = v.size();
  CVector c(n, Complex{});
  for (std::size_t k = 0; k < n; ++k) {
    Complex d = 0.0;
    for (std::size_t i = 0; i < n; ++i) d += std::conj(e.vectors(i, k)) * v[i];
    c[k] = d * std::polar(1.0, s * e.values[k]);
  }
  CVector out(n, Complex{});
  for (std::size_t i = 0; i < n; ++i) {
    Complex d = 0.0;
    for (std::size_t k = 0; k < n; ++k) d += e.vectors(i, k) * c[k];
    out[i] = d;
  }
  return out;
}

Complex quadratic_form(const CVector& s, const CMatrix& f) {
  const std::size_t n = s.size();
  Complex acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    if (s[i] == Complex{}) continue;
    Complex row = 0.0;
    for (std::size_t j = 0; j < n; ++j) row += f(i, j) * s[j];
    acc += std::conj(s[i]) * row;
  }
  return acc;
}

std::vector<double> trapezoid_weights(const GridAxis& a) {
  std::vector<double> w(a.count, a.step());
  if (a.count > 1) {
    w.front() *= 0.5;
    w.back() *= 0.5;
  }
  return w;
}

// f = {f(−2h), f(−h), f(h), f(2h)}
Complex five_point(const std::array<Complex, 4>& f, double h) { return (f[0] - 8.0 * f[1] + 8.0 * f[2] - f[3]) / (12.0 * h); }

}  // namespace

InitialState oscillator_ground_state(std::size_t n) {
  if (n < 2) throw DimensionError("oscillator_ground_state: N must be at least 2");
  InitialState s;
  s.coefficients.assign(n, Complex{});
  s.coefficients[0] = 1.0;
  s.descriptor = "oscillator ground state";
  return s;
}

InitialState gaussian_state(const GridRealization& grid, double center, double width) {
  if (!(width > 0.0)) throw PreconditionError("gaussian_state: width must be positive");
  double norm2 = 0.0;
  for (std::size_t j = 0; j < grid.m(); ++j) {
    const double x = (grid.node(j) - center) / width;
    norm2 += grid.step() * std::exp(-x * x);
  }
  const double c = 1.0 / std::sqrt(norm2);
  InitialState s;
  s.profile.positive = [c, center, width](double q) {
    const double x = (q - center) / width;
    return Complex(c * std::exp(-0.5 * x * x));
  };
  s.coefficients.assign(grid.carrier_size(), Complex{});
  const double sh = std::sqrt(grid.step());
  for (std::size_t j = 0; j < grid.m(); ++j) s.coefficients[j] = sh * s.profile.positive(grid.node(j));
  char buf[96];
  std::snprintf(buf, sizeof buf, "gaussian(center=%g, width=%g) on the positive ray", center, width);
  s.descriptor = buf;
  return s;
}

CoherentFamily CoherentFamily::from_operators(RepOperators ops, InitialState phi0, std::vector<GridAxis> lattice) {
  if (lattice.size() != static_cast<std::size_t>(ops.dim()))
    throw DimensionError("CoherentFamily: lattice needs one axis per group coordinate");
  if (phi0.coefficients.size() != ops.size()) throw DimensionError("CoherentFamily: φ₀ size differs from the carrier");
  if (std::abs(numerics::norm2(phi0.coefficients) - 1.0) > 1e-12)
    throw PreconditionError("CoherentFamily: φ₀ must have unit norm");
  CoherentFamily f;
  auto herm = [](const CMatrix& m) { return numerics::eig_hermitian(0.5 * (m + m.adjoint())); };
  f.spectral_.push_back(herm(ops.x0));
  for (const auto& x : ops.xk) f.spectral_.push_back(herm(x));
  f.ops_ = std::move(ops);
  f.phi0_ = std::move(phi0);
  f.lattice_ = std::move(lattice);
  return f;
}

CoherentFamily CoherentFamily::from_grid(const GridRealization& grid, InitialState phi0, std::vector<GridAxis> lattice,
                                         int lambda_sign) {
  if (lattice.size() != 2) throw DimensionError("CoherentFamily: grid carriers are two-dimensional");
  if (!phi0.profile.positive && !phi0.profile.negative)
    throw PreconditionError("CoherentFamily: grid carriers need an analytic φ₀ profile");
  if (phi0.coefficients.size() != grid.carrier_size()) throw DimensionError("CoherentFamily: φ₀ size differs from the carrier");
  if (lambda_sign != 1 && lambda_sign != -1) throw PreconditionError("CoherentFamily: λ sign must be ±1");
  CoherentFamily f;
  f.grid_ = true;
  f.two_ray_ = grid.kind() == representation::VariableKind::KSpaceRays;
  f.lambda_sign_ = lambda_sign;
  f.nodes_ = grid.nodes();
  f.sqrt_h_ = std::sqrt(grid.step());
  f.ops_ = f.two_ray_ ? representation::two_ray_operators(grid)
                      : representation::jordan_schwinger(grid, {static_cast<double>(lambda_sign)});
  f.phi0_ = std::move(phi0);
  f.lattice_ = std::move(lattice);
  return f;
}

std::size_t CoherentFamily::lattice_size() const {
  std::size_t n = 1;
  for (const auto& a : lattice_) n *= a.count;
  return n;
}

SplitElement CoherentFamily::lattice_point(std::size_t flat) const {
  std::vector<double> x(lattice_.size());
  for (std::size_t a = lattice_.size(); a-- > 0;) {
    x[a] = lattice_[a].at(flat % lattice_[a].count);
    flat /= lattice_[a].count;
  }
  return SplitElement(x[0], std::vector<double>(x.begin() + 1, x.end()));
}

CVector CoherentFamily::state(const SplitElement& g) const {
  if (g.dim() != dim()) throw DimensionError("CoherentFamily::state: point dimension mismatch");
  if (grid_) {
    const std::size_t m = nodes_.size();
    CVector v(phi0_.coefficients.size(), Complex{});
    const double t = g.t(), y = g.y(0);
    auto fill = [&](const std::function<Complex(double)>& prof, double sign, std::size_t offset) {
      if (!prof) return;
      for (std::size_t j = 0; j < m; ++j) {
        const double u = nodes_[j] + t;
        v[offset + j] = sqrt_h_ * std::polar(1.0, sign * y * std::exp(u)) * prof(u);
      }
    };
    if (two_ray_) {
      fill(phi0_.profile.positive, 1.0, 0);
      fill(phi0_.profile.negative, -1.0, m);
    } else {
      fill(phi0_.profile.positive, static_cast<double>(lambda_sign_), 0);
    }
    return v;
  }
  CVector v = phi0_.coefficients;
  for (std::size_t k = spectral_.size(); k-- > 1;) v = apply_phase(spectral_[k], g.y(k - 1), v);
  return apply_phase(spectral_[0], g.t(), v);
}

CVector CoherentFamily::state_expm(const SplitElement& g) const {
  if (grid_) throw PreconditionError("state_expm: only for finite-matrix carriers");
  const Complex i(0.0, 1.0);
  CVector v = phi0_.coefficients;
  for (std::size_t k = ops_.xk.size(); k-- > 0;) v = numerics::expm((i * g.y(k)) * ops_.xk[k]) * v;
  return numerics::expm((i * g.t()) * ops_.x0) * v;
}

CVector coherent_state(const CoherentFamily& family, const SplitElement& g) { return family.state(g); }

Complex dequantize_at(const CMatrix& f, const CoherentFamily& family, const SplitElement& g) {
  if (f.rows() != family.carrier_size() || f.cols() != family.carrier_size())
    throw DimensionError("dequantize: operator size differs from the carrier");
  return quadratic_form(family.state(g), f);
}

GridFunction dequantize(const CMatrix& f, const CoherentFamily& family) {
  if (f.rows() != family.carrier_size() || f.cols() != family.carrier_size())
    throw DimensionError("dequantize: operator size differs from the carrier");
  GridFunction out = GridFunction::zeros(family.lattice());
  for (std::size_t p = 0; p < family.lattice_size(); ++p)
    out.values()[p] = quadratic_form(family.state(family.lattice_point(p)), f);
  return out;
}

GridFunction star(const CMatrix& f1, const CMatrix& f2, const CoherentFamily& family) {
  if (f1.cols() != f2.rows()) throw DimensionError("star: incompatible operator sizes");
  return dequantize(f1 * f2, family);
}

ComderReport comder_check(const CMatrix& f, const CoherentFamily& family, double h) {
  if (!(h > 0.0)) throw PreconditionError("comder_check: h must be positive");
  const RepOperators& ops = family.ops();
  const CMatrix c0 = numerics::commutator(ops.x0, f);
  std::vector<CMatrix> ck;
  for (const auto& x : ops.xk) ck.push_back(numerics::commutator(x, f));
  const Complex i(0.0, 1.0);
  double dt = 0.0, st = 0.0, dy = 0.0, sy = 0.0;
  for (std::size_t p = 0; p < family.lattice_size(); ++p) {
    const SplitElement g = family.lattice_point(p);
    std::vector<double> y(g.y().begin(), g.y().end());
    std::array<Complex, 4> s;
    const double off[4] = {-2.0, -1.0, 1.0, 2.0};
    for (int q = 0; q < 4; ++q) s[q] = dequantize_at(f, family, SplitElement(g.t() + off[q] * h, y));
    Complex d = five_point(s, h);
    const Complex r0 = dequantize_at(c0, family, g);
    dt = std::max(dt, std::abs(i * d - r0));
    st = std::max(st, std::abs(r0));
    for (std::size_t k = 0; k < ck.size(); ++k) {
      for (int q = 0; q < 4; ++q) {
        std::vector<double> yq = y;
        yq[k] += off[q] * h;
        s[q] = dequantize_at(f, family, SplitElement(g.t(), yq));
      }
      d = five_point(s, h);
      const Complex rk = dequantize_at(ck[k], family, g);
      dy = std::max(dy, std::abs(i * std::exp(-g.t()) * d - rk));
      sy = std::max(sy, std::abs(rk));
    }
  }
  return {st > 0.0 ? dt / st : dt, sy > 0.0 ? dy / sy : dy};
}

QuantizeResult quantize_ls(const GridFunction& samples, const CoherentFamily& family, std::size_t block) {
  const std::size_t n = family.carrier_size();
  const std::size_t b = block == 0 ? n : block;
  if (b > n) throw DimensionError("quantize_ls: block exceeds the carrier size");
  const std::size_t np = family.lattice_size();
  if (samples.size() != np) throw DimensionError("quantize_ls: samples must live on the family lattice");
  if (np < b * b) throw DimensionError("quantize_ls: fewer lattice points than unknowns");
  CMatrix a(np, b * b);
  for (std::size_t p = 0; p < np; ++p) {
    const CVector s = family.state(family.lattice_point(p));
    for (std::size_t i = 0; i < b; ++i)
      for (std::size_t j = 0; j < b; ++j) a(p, i * b + j) = std::conj(s[i]) * s[j];
  }
  const auto ls = numerics::pinv_least_squares(a, samples.values());
  QuantizeResult r;
  r.f = CMatrix(n, n);
  for (std::size_t i = 0; i < b; ++i)
    for (std::size_t j = 0; j < b; ++j) r.f(i, j) = ls.x[i * b + j];
  r.rank = ls.rank;
  r.condition = ls.condition;
  r.residual = group::relative_l2(dequantize(r.f, family), samples);
  return r;
}

BOperatorResult b_operator(const CoherentFamily& family, const BOperatorOptions& opts) {
  const std::size_t n = family.carrier_size();
  if (!opts.sector.empty() && opts.sector.size() != n) throw DimensionError("b_operator: sector mask size mismatch");
  if (opts.test_states.cols() > 0 && opts.test_states.rows() != n)
    throw DimensionError("b_operator: test states must live in the carrier");
  const auto& lat = family.lattice();
  std::vector<std::vector<double>> w;
  for (const auto& a : lat) w.push_back(trapezoid_weights(a));
  const group::HaarData haar{family.dim()};

  BOperatorResult r;
  const std::size_t k = opts.test_states.cols();
  CMatrix proj(k, k);
  double total = 0.0, outside = 0.0;
  if (opts.assemble) r.b = CMatrix(n, n);

  constexpr std::size_t chunk = 256;
  CMatrix states(n, chunk);
  std::vector<double> weights(chunk);
  std::size_t filled = 0;
  auto flush = [&]() {
    if (!opts.assemble || filled == 0) return;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t c = 0; c < filled; ++c) {
        const Complex a = weights[c] * states(i, c);
        if (a == Complex{}) continue;
        for (std::size_t j = 0; j < n; ++j) r.b(i, j) += a * std::conj(states(j, c));
      }
    filled = 0;
  };

  for (std::size_t p = 0; p < family.lattice_size(); ++p) {
    const SplitElement g = family.lattice_point(p);
    double wp = haar.left_density(g.t());
    std::size_t rest = p;
    for (std::size_t a = lat.size(); a-- > 0;) {
      wp *= w[a][rest % lat[a].count];
      rest /= lat[a].count;
    }
    const CVector s = family.state(g);
    for (std::size_t i = 0; i < n; ++i) {
      const double m = wp * std::norm(s[i]);
      total += m;
      if (!opts.sector.empty() && !opts.sector[i]) outside += m;
    }
    if (k > 0) {
      CVector c(k);
      for (std::size_t a = 0; a < k; ++a) {
        Complex d = 0.0;
        for (std::size_t i = 0; i < n; ++i) d += std::conj(opts.test_states(i, a)) * s[i];
        c[a] = d;
      }
      for (std::size_t a = 0; a < k; ++a)
        for (std::size_t b = 0; b < k; ++b) proj(a, b) += wp * c[a] * std::conj(c[b]);
    }
    if (opts.assemble) {
      for (std::size_t i = 0; i < n; ++i) states(i, filled) = s[i];
      weights[filled++] = wp;
      if (filled == chunk) flush();
    }
  }
  flush();

  r.trace = total;
  r.complement_weight = total > 0.0 ? outside / total : 0.0;
  if (k > 0) {
    double off = 0.0, diag = 0.0;
    for (std::size_t a = 0; a < k; ++a) {
      r.test_diagonal.push_back(proj(a, a).real());
      for (std::size_t b = 0; b < k; ++b) (a == b ? diag : off) += std::norm(proj(a, b));
    }
    r.offdiag_ratio = std::sqrt(off / diag);
    // RMS size of the spatial generators on the test states against the y-lattice Nyquist limit
    for (std::size_t ax = 1; ax < lat.size(); ++ax) {
      const double x_rms = (family.ops().xk[ax - 1] * opts.test_states).norm_fro() / std::sqrt(static_cast<double>(k));
      if (lat[ax].step() * x_rms > std::numbers::pi) r.conditioning_warning = true;
    }
  }
  return r;
}

}  // namespace kfuzzy::fuzzy
