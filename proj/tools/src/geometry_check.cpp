#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <random>

#include "commands.hpp"
#include "config.hpp"
#include "kfuzzy/errors.hpp"
#include "kfuzzy/geometry/embedding.hpp"
#include "kfuzzy/geometry/laplace.hpp"
#include "kfuzzy/geometry/metric.hpp"
#include "kfuzzy/io/report_io.hpp"
#include "report.hpp"

namespace kfuzzy::cli {

namespace {

using geometry::RealMatrix;
using group::Complex;
using group::GridAxis;
using group::SplitElement;

struct ModeConfig {
  int dim = 2;
  Complex nu;
  std::vector<double> lambda;
  int kind = 1;
  std::vector<GridAxis> axes;
};

struct GeometryConfig {
  CommonConfig common;
  std::vector<int> dimensions{2, 3, 4};
  std::size_t metrics = 100;
  std::size_t points_per_metric = 5;
  std::size_t generic_samples = 100;
  std::size_t killing_metrics = 10;
  double killing_step = 1e-4;
  std::vector<double> thetas{0.0, std::numbers::pi / 8, std::numbers::pi / 2, 0.6, 2.0, -0.5};
  std::size_t embedding_points = 1000;
  double embedding_range = 1.5;
  std::vector<ModeConfig> modes;
  double tol_reduction = 1e-9;
  double tol_reduction_2d = 1e-12;
  double tol_killing = 1e-6;
  double tol_quadric = 1e-12;
  double tol_induced = 1e-12;
  double tol_witness = 1e-12;
  double tol_mode = 1e-6;
};

std::vector<ModeConfig> default_modes() {
  const GridAxis fine{-1.0, 1.0, 512};
  // second spatial axis of the D = 3 grid: 16 points at the spacing of the first one
  const double h = fine.step();
  const GridAxis narrow{-7.5 * h, 7.5 * h, 16};
  std::vector<ModeConfig> out;
  for (Complex nu : {Complex(0.3, 0.0), Complex(0.5, 0.0), Complex(0.0, 0.4)}) {
    out.push_back({2, nu, {1.0}, 1, {fine, fine}});
    out.push_back({3, nu, {0.7, 0.7}, 1, {fine, fine, narrow}});
  }
  return out;
}

ModeConfig read_mode(const json& j, const std::string& path) {
  ObjectReader r(j, path);
  ModeConfig m;
  m.dim = static_cast<int>(r.integer("dimension", 2, 2, 3));
  m.nu = Complex(r.number("nu_re", 0.5), r.number("nu_im", 0.0));
  m.lambda = r.numbers("lambda", std::vector<double>(static_cast<std::size_t>(m.dim - 1), 1.0));
  if (m.lambda.size() != static_cast<std::size_t>(m.dim - 1))
    throw ConfigError(path + ".lambda: needs dimension − 1 entries");
  m.kind = static_cast<int>(r.integer("kind", 1, 1, 2));
  const json& axes = r.array("axes");
  if (axes.size() != static_cast<std::size_t>(m.dim)) throw ConfigError(path + ".axes: needs one axis per dimension");
  std::size_t total = 1;
  for (std::size_t a = 0; a < axes.size(); ++a) {
    m.axes.push_back(read_axis(axes[a], path + ".axes[" + std::to_string(a) + "]", 9));
    total *= m.axes.back().count;
  }
  if (total > (std::size_t{1} << 24)) throw ConfigError(path + ".axes: more than 2^24 grid points");
  r.finish();
  return m;
}

GeometryConfig read_config(const json& j) {
  ObjectReader r(j, "config");
  GeometryConfig c;
  c.common = read_common(r);
  c.dimensions = r.integers("dimensions", c.dimensions, 2, 8);
  c.metrics = static_cast<std::size_t>(r.integer("metrics_per_dimension", 100, 1, 100000));
  c.points_per_metric = static_cast<std::size_t>(r.integer("points_per_metric", 5, 1, 1000));
  c.generic_samples = static_cast<std::size_t>(r.integer("generic_samples", 100, 0, 100000));
  c.killing_metrics = static_cast<std::size_t>(r.integer("killing_metrics", 10, 0, 100000));
  c.killing_step = r.number("killing_step", c.killing_step);
  if (!(c.killing_step > 0.0 && c.killing_step < 0.1)) throw ConfigError("config.killing_step: must lie in (0, 0.1)");
  c.thetas = r.numbers("thetas", c.thetas);
  c.embedding_points = static_cast<std::size_t>(r.integer("embedding_points", 1000, 1, 10'000'000));
  c.embedding_range = r.number("embedding_range", c.embedding_range);
  if (!(c.embedding_range > 0.0 && c.embedding_range <= 5.0))
    throw ConfigError("config.embedding_range: must lie in (0, 5]");
  if (r.has("modes")) {
    const json& modes = r.array("modes");
    for (std::size_t i = 0; i < modes.size(); ++i) c.modes.push_back(read_mode(modes[i], "config.modes[" + std::to_string(i) + "]"));
  } else {
    c.modes = default_modes();
  }
  ObjectReader t(r.object("thresholds"), "config.thresholds");
  c.tol_reduction = t.number("reduction", c.tol_reduction);
  c.tol_reduction_2d = t.number("reduction_2d", c.tol_reduction_2d);
  c.tol_killing = t.number("killing", c.tol_killing);
  c.tol_quadric = t.number("quadric", c.tol_quadric);
  c.tol_induced = t.number("induced_metric", c.tol_induced);
  c.tol_witness = t.number("half_space_witness", c.tol_witness);
  c.tol_mode = t.number("mode_residual", c.tol_mode);
  t.finish();
  r.finish();

  // Refuse flat or out-of-range angles before running anything.
  for (double th : c.thetas) {
    try {
      (void)geometry::reduce_metric_2d(th);
    } catch (const PreconditionError& e) {
      char buf[64];
      std::snprintf(buf, sizeof buf, "config.thetas: θ = %.17g refused: ", th);
      throw ConfigError(std::string(buf) + e.what());
    }
  }
  return c;
}

struct Rng {
  std::mt19937_64 gen;
  std::uniform_real_distribution<double> u{-1.0, 1.0};
  explicit Rng(std::uint64_t seed) : gen(seed) {}
  double operator()() { return u(gen); }
  SplitElement point(int dim, double range) {
    const double t = range * u(gen);
    std::vector<double> y(static_cast<std::size_t>(dim - 1));
    for (auto& v : y) v = range * u(gen);
    return SplitElement(t, std::move(y));
  }
};

void symmetrize(RealMatrix& g) {
  for (std::size_t i = 0; i < g.rows(); ++i)
    for (std::size_t j = 0; j < i; ++j) g(i, j) = g(j, i) = 0.5 * (g(i, j) + g(j, i));
}

// Random Lorentzian metric of the reducible class. For D ≥ 3: G_ss = −(AᵀA + εI) negative definite,
// G_0 = −G_ss c for a random shear c, G_00 = cᵀG_ss c + s with s > 0. For D = 2 any det < 0 matrix.
RealMatrix random_reducible_metric(int dim, Rng& rng) {
  const auto d = static_cast<std::size_t>(dim);
  if (dim == 2) {
    for (;;) {
      RealMatrix g{{rng() * 2.0, rng()}, {rng(), rng() * 2.0}};
      symmetrize(g);
      const double det = g(0, 0) * g(1, 1) - g(0, 1) * g(1, 0);
      if (det < -0.05) return g;
    }
  }
  const std::size_t n = d - 1;
  RealMatrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = rng();
  RealMatrix gss = a.transpose() * a;
  for (std::size_t i = 0; i < n; ++i) gss(i, i) += 0.1;
  gss = -1.0 * gss;
  std::vector<double> c(n);
  for (auto& v : c) v = rng();
  const double s = 0.6 + 0.4 * rng();
  RealMatrix g(d, d);
  double cgc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    double g0 = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      g(i + 1, j + 1) = gss(i, j);
      g0 -= gss(i, j) * c[j];
      cgc += c[i] * gss(i, j) * c[j];
    }
    g(0, i + 1) = g(i + 1, 0) = g0;
  }
  g(0, 0) = cgc + s;
  return g;
}

// G = Lᵀ diag(1, −1, …) L with L near the identity; not every such metric is reducible for D ≥ 3.
RealMatrix random_generic_metric(int dim, Rng& rng) {
  const auto d = static_cast<std::size_t>(dim);
  RealMatrix l(d, d);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) l(i, j) = (i == j ? 1.0 : 0.0) + 0.4 * rng();
  std::vector<double> eta(d, -1.0);
  eta[0] = 1.0;
  RealMatrix g = l.transpose() * RealMatrix::diagonal(eta) * l;
  symmetrize(g);
  return g;
}

void metric_checks(const GeometryConfig& c, int dim, Rng& rng, CheckList& out, nlohmann::ordered_json& info) {
  double worst = 0.0, killing_left = 0.0, killing_right = 0.0;
  for (std::size_t i = 0; i < c.metrics; ++i) {
    const geometry::MetricSpec spec(random_reducible_metric(dim, rng), c.common.tol);
    std::vector<SplitElement> pts;
    for (std::size_t k = 0; k < c.points_per_metric; ++k) pts.push_back(rng.point(dim, 1.0));
    try {
      const auto map = geometry::reduce_metric_general(spec);
      worst = std::max(worst, geometry::reduction_residual(spec, map, pts));
    } catch (const PreconditionError&) {
      worst = INFINITY;
    }
    if (i < c.killing_metrics) {
      killing_left = std::max(killing_left, geometry::killing_deviation(spec, geometry::FrameSide::Left, pts[0], c.killing_step));
      killing_right = std::max(killing_right, geometry::killing_deviation(spec, geometry::FrameSide::Right, pts[0], c.killing_step));
    }
  }
  out.add(make_check("metric_reduction", dim, worst, c.tol_reduction));
  if (c.killing_metrics > 0) {
    char note[96];
    std::snprintf(note, sizeof note, "right-invariant fields: %.3e", killing_right);
    out.add(make_check("killing_left_fields", dim, killing_left, c.tol_killing, note));
  }

  std::size_t rejected = 0;
  double generic_worst = 0.0;
  for (std::size_t i = 0; i < c.generic_samples; ++i) {
    try {
      const geometry::MetricSpec spec(random_generic_metric(dim, rng), c.common.tol);
      const auto map = geometry::reduce_metric_general(spec);
      std::vector<SplitElement> pts{rng.point(dim, 1.0)};
      generic_worst = std::max(generic_worst, geometry::reduction_residual(spec, map, pts));
    } catch (const PreconditionError&) {
      ++rejected;
    }
  }
  info["generic_lorentzian"].push_back(
      {{"dimension", dim}, {"samples", c.generic_samples}, {"rejected", rejected}, {"worst_residual", generic_worst}});
}

void family_2d_checks(const GeometryConfig& c, Rng& rng, CheckList& out) {
  for (double th : c.thetas) {
    const auto red = geometry::reduce_metric_2d(th);
    const RealMatrix j = red.jacobian();
    double worst = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double tau = 1.6 + 1.4 * rng();
      const double x = rng();
      const auto [tp, xp] = red.apply(tau, x);
      const RealMatrix pulled = j.transpose() * geometry::planar_metric_tau(tp, xp) * j;
      worst = std::max(worst, geometry::relative_max_diff(pulled, red.scale * geometry::family_metric_2d(th, tau, x)));
    }
    char note[64];
    std::snprintf(note, sizeof note, "theta=%.6g scale=%.6g", th, red.scale);
    out.add(make_check("reduction_2d_family", 2, worst, c.tol_reduction_2d, note));
  }
}

void embedding_checks(const GeometryConfig& c, int dim, Rng& rng, CheckList& out, nlohmann::ordered_json& info) {
  double quadric = 0.0, induced = 0.0, witness = 0.0, alternate = 0.0;
  for (std::size_t i = 0; i < c.embedding_points; ++i) {
    const auto p = rng.point(dim, c.embedding_range);
    const auto x = geometry::embed(p);
    quadric = std::max(quadric, std::abs(geometry::quadric_residual(x)));
    induced = std::max(induced, geometry::relative_max_diff(geometry::induced_metric(p), geometry::planar_metric(p)));
    const double w = geometry::half_space_witness(x);
    witness = std::max(witness, w > 0.0 ? std::abs(w - std::exp(p.t())) / std::exp(p.t()) : INFINITY);
    alternate = std::max(alternate, std::abs(geometry::quadric_residual(geometry::embed_alternate_signs(p))));
  }
  out.add(make_check("embedding_quadric", dim, quadric, c.tol_quadric));
  out.add(make_check("embedding_induced_metric", dim, induced, c.tol_induced));
  out.add(make_check("half_space_witness", dim, witness, c.tol_witness));
  info["alternate_sign_quadric_residual"].push_back({{"dimension", dim}, {"max", alternate}});
}

std::string format_nu(Complex nu) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "nu=%.6g%+.6gi", nu.real(), nu.imag());
  return buf;
}

}  // namespace

CommandResult cmd_geometry_check(const json& config, const RunOptions& opts) {
  const GeometryConfig c = read_config(config);
  const std::uint64_t seed = opts.seed.value_or(c.common.seed);
  CommandResult res;
  res.output_dir = c.common.output_dir;

  CheckList checks;
  nlohmann::ordered_json info;
  info["generic_lorentzian"] = nlohmann::ordered_json::array();
  info["alternate_sign_quadric_residual"] = nlohmann::ordered_json::array();
  info["mode_residual_exp_plus_2t"] = nlohmann::ordered_json::array();
  for (int dim : c.dimensions) {
    Rng rng(seed * 1000003ull + static_cast<std::uint64_t>(dim));
    metric_checks(c, dim, rng, checks, info);
    embedding_checks(c, dim, rng, checks, info);
  }
  {
    Rng rng(seed * 1000003ull);
    family_2d_checks(c, rng, checks);
  }

  std::size_t mode_index = 0;
  for (const auto& m : c.modes) {
    geometry::ClassicalMode mode;
    mode.dim = m.dim;
    mode.mu2 = geometry::ClassicalMode::mu2_for_order(m.dim, m.nu);
    mode.lambda = m.lambda;
    mode.kind = m.kind;
    const auto field = geometry::classical_mode_grid(mode, m.axes);
    const auto r = geometry::laplace_apply(field, mode.mu2);
    geometry::LaplaceOptions plus;
    plus.spatial = geometry::SpatialFactor::ExpPlus2t;
    const double plus_rel = geometry::laplace_apply(field, mode.mu2, plus).relative();
    checks.add(make_check("mode_residual", m.dim, r.relative(), c.tol_mode, format_nu(m.nu)));
    info["mode_residual_exp_plus_2t"].push_back({{"dimension", m.dim}, {"nu", format_nu(m.nu)}, {"relative", plus_rel}});
    if (opts.emit_plots_csv) {
      std::size_t stride = 1;
      for (const auto& a : m.axes) stride = std::max(stride, a.count / 64);
      const std::string base = "geometry-mode-" + std::to_string(mode_index);
      res.files.emplace_back(base + ".csv", io::grid_function_csv(field, &r.residual, stride));
      res.files.emplace_back(base + ".json",
                             io::grid_function_header_json(field, "classical mode, " + format_nu(m.nu) +
                                                                      ", CSV thinned by stride " + std::to_string(stride)));
    }
    ++mode_index;
  }

  nlohmann::ordered_json report;
  report["command"] = "geometry-check";
  report["config_hash"] = config_hash(config, seed);
  report["timestamp"] = opts.timestamp.empty() ? utc_timestamp() : opts.timestamp;
  report["seed"] = seed;
  report["all_pass"] = checks.all_pass();
  report["checks"] = checks.to_json();
  report["diagnostics"] = info;

  res.exit_code = checks.all_pass() ? kSuccess : kAssertionFailure;
  res.files.insert(res.files.begin(), {"geometry-check.json", report.dump(2) + "\n"});
  if (opts.emit_plots_csv) res.files.emplace_back("geometry-check.csv", checks.to_csv());
  res.summary = checks.summary_lines();
  return res;
}

}  // namespace kfuzzy::cli
