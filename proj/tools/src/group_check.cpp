#include <algorithm>
#include <cmath>
#include <random>

#include "commands.hpp"
#include "config.hpp"
#include "kfuzzy/geometry/frames.hpp"
#include "kfuzzy/group/grid_function.hpp"
#include "report.hpp"

namespace kfuzzy::cli {

namespace {

using group::ExpElement;
using group::SplitElement;

struct GroupConfig {
  CommonConfig common;
  std::vector<int> dimensions{2, 3, 4};
  std::size_t samples = 10000;
  double range = 5.0;  // coordinates drawn uniformly from [−range, range]
  double bracket_step = 1e-4;
  std::size_t bracket_points = 50;
  std::size_t haar_points = 33;  // trapezoid steps 0.25 in t, 0.5 in y: aliasing error below 1e-16
  double tol_group_law = 1e-10;
  double tol_round_trip = 1e-12;
  double tol_bracket = 1e-6;
  double tol_duality = 1e-14;
  double tol_modular = 1e-12;
  double tol_haar = 1e-10;
};

GroupConfig read_config(const json& j) {
  ObjectReader r(j, "config");
  GroupConfig c;
  c.common = read_common(r);
  c.dimensions = r.integers("dimensions", c.dimensions, 2, 8);
  c.samples = static_cast<std::size_t>(r.integer("samples", 10000, 1, 10'000'000));
  c.range = r.number("coordinate_range", c.range);
  if (!(c.range > 0.0 && c.range <= 10.0)) throw ConfigError("config.coordinate_range: must lie in (0, 10]");
  c.bracket_step = r.number("bracket_step", c.bracket_step);
  if (!(c.bracket_step > 0.0 && c.bracket_step < 0.1)) throw ConfigError("config.bracket_step: must lie in (0, 0.1)");
  c.bracket_points = static_cast<std::size_t>(r.integer("bracket_points", 50, 1, 100000));
  c.haar_points = static_cast<std::size_t>(r.integer("haar_points", 33, 11, 401));
  ObjectReader t(r.object("thresholds"), "config.thresholds");
  c.tol_group_law = t.number("group_law", c.tol_group_law);
  c.tol_round_trip = t.number("round_trip", c.tol_round_trip);
  c.tol_bracket = t.number("bracket", c.tol_bracket);
  c.tol_duality = t.number("duality", c.tol_duality);
  c.tol_modular = t.number("modular", c.tol_modular);
  c.tol_haar = t.number("haar", c.tol_haar);
  t.finish();
  r.finish();
  return c;
}

template <class Span>
double coords_scale(const Span& a) {
  double s = 1.0;
  for (double v : a) s = std::max(s, std::abs(v));
  return s;
}

double split_distance(const SplitElement& a, const SplitElement& b) {
  double err = std::abs(a.t() - b.t()) / std::max(1.0, std::abs(b.t()));
  for (std::size_t k = 0; k < a.y().size(); ++k)
    err = std::max(err, std::abs(a.y(k) - b.y(k)) / std::max(1.0, std::abs(b.y(k))));
  return err;
}

double exp_distance(const ExpElement& a, const ExpElement& b) {
  double err = 0.0;
  for (std::size_t k = 0; k < a.coords().size(); ++k)
    err = std::max(err, std::abs(a.coords()[k] - b.coords()[k]) / std::max(1.0, std::abs(b.coords()[k])));
  return err;
}

struct Sampler {
  std::mt19937_64 rng;
  std::uniform_real_distribution<double> u;
  Sampler(std::uint64_t seed, double range) : rng(seed), u(-range, range) {}
  SplitElement split(int dim) {
    const double t = u(rng);
    std::vector<double> y(static_cast<std::size_t>(dim - 1));
    for (auto& v : y) v = u(rng);
    return SplitElement(t, std::move(y));
  }
  ExpElement exp(int dim) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    for (auto& v : x) v = u(rng);
    return ExpElement(std::move(x));
  }
};

void group_law_checks(const GroupConfig& c, int dim, Sampler& s, CheckList& out) {
  double assoc_split = 0.0, assoc_exp = 0.0, inv_split = 0.0, inv_exp = 0.0, round_trip = 0.0, modular = 0.0;
  const auto id = SplitElement::identity(dim);
  for (std::size_t i = 0; i < c.samples; ++i) {
    const auto a = s.split(dim), b = s.split(dim), g = s.split(dim);
    assoc_split = std::max(assoc_split, split_distance(group::multiply_split(group::multiply_split(a, b), g),
                                                       group::multiply_split(a, group::multiply_split(b, g))));
    const auto ai = group::inverse(a);
    const double scale = std::max(coords_scale(a.y()), coords_scale(ai.y()));
    inv_split = std::max(inv_split, split_distance(group::multiply_split(a, ai), id) / scale);
    inv_split = std::max(inv_split, split_distance(group::multiply_split(ai, a), id) / scale);
    const double dab = group::modular(group::multiply_split(a, b));
    modular = std::max(modular, std::abs(dab - group::modular(a) * group::modular(b)) / dab);

    const auto x = s.exp(dim), y = s.exp(dim), z = s.exp(dim);
    assoc_exp = std::max(assoc_exp, exp_distance(group::multiply_exp(group::multiply_exp(x, y), z),
                                                 group::multiply_exp(x, group::multiply_exp(y, z))));
    const auto xi = group::inverse(x);
    const ExpElement e(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
    inv_exp = std::max(inv_exp, exp_distance(group::multiply_exp(x, xi), e) / coords_scale(x.coords()));
    round_trip = std::max(round_trip, exp_distance(group::from_split(group::to_split(x)), x));
    round_trip = std::max(round_trip, split_distance(group::to_split(group::from_split(a)), a));
  }
  out.add(make_check("associativity_split", dim, assoc_split, c.tol_group_law));
  out.add(make_check("associativity_exp", dim, assoc_exp, c.tol_group_law));
  out.add(make_check("inverse_split", dim, inv_split, c.tol_group_law));
  out.add(make_check("inverse_exp", dim, inv_exp, c.tol_group_law));
  out.add(make_check("exp_split_round_trip", dim, round_trip, c.tol_round_trip));
  out.add(make_check("modular_homomorphism", dim, modular, c.tol_modular));
}

void frame_checks(const GroupConfig& c, int dim, Sampler& s, CheckList& out) {
  double right = 0.0, left = 0.0, duality = 0.0;
  for (std::size_t i = 0; i < c.bracket_points; ++i) {
    const auto p = s.split(dim);
    right = std::max(right, geometry::bracket_check(geometry::FrameSide::Right, p, c.bracket_step).max_deviation);
    left = std::max(left, geometry::bracket_check(geometry::FrameSide::Left, p, c.bracket_step).max_deviation);
    for (auto side : {geometry::FrameSide::Right, geometry::FrameSide::Left}) {
      const auto f = geometry::frame_at(p, side);
      for (int mu = 0; mu < dim; ++mu) {
        for (int nu = 0; nu < dim; ++nu) {
          double pairing = 0.0;
          for (int a = 0; a < dim; ++a) pairing += f.forms(mu, a) * f.fields(nu, a);
          duality = std::max(duality, std::abs(pairing - (mu == nu ? 1.0 : 0.0)));
        }
      }
    }
  }
  out.add(make_check("frame_bracket_right", dim, right, c.tol_bracket));
  out.add(make_check("frame_bracket_left", dim, left, c.tol_bracket));
  out.add(make_check("frame_duality", dim, duality, c.tol_duality));
}

// ∫ f(g₀g) dμ_L(g) = ∫ f dμ_L and ∫ f(gg₀) dμ_R(g) = ∫ f dμ_R for a Gaussian bump.
void haar_checks(const GroupConfig& c, int dim, CheckList& out) {
  std::vector<group::GridAxis> axes{{-4.0, 4.0, c.haar_points}};
  for (int k = 1; k < dim; ++k) axes.push_back({-8.0, 8.0, c.haar_points});
  const auto bump = [](const SplitElement& g) {
    double r = 4.0 * g.t() * g.t();
    for (double y : g.y()) r += y * y;
    return group::Complex(std::exp(-r));
  };
  std::vector<double> y0(static_cast<std::size_t>(dim - 1));
  for (std::size_t k = 0; k < y0.size(); ++k) y0[k] = 0.2 - 0.1 * static_cast<double>(k);
  const SplitElement g0(0.3, y0);
  const auto left_ref = group::integrate(axes, bump, group::HaarSide::Left);
  const auto left = group::integrate(
      axes, [&](const SplitElement& g) { return bump(group::multiply_split(g0, g)); }, group::HaarSide::Left);
  const auto right_ref = group::integrate(axes, bump, group::HaarSide::Right);
  const auto right = group::integrate(
      axes, [&](const SplitElement& g) { return bump(group::multiply_split(g, g0)); }, group::HaarSide::Right);
  out.add(make_check("haar_left_invariance", dim, std::abs(left - left_ref) / std::abs(left_ref), c.tol_haar));
  out.add(make_check("haar_right_invariance", dim, std::abs(right - right_ref) / std::abs(right_ref), c.tol_haar));
}

}  // namespace

CommandResult cmd_group_check(const json& config, const RunOptions& opts) {
  const GroupConfig c = read_config(config);
  const std::uint64_t seed = opts.seed.value_or(c.common.seed);

  CheckList checks;
  for (int dim : c.dimensions) {
    Sampler s(seed + static_cast<std::uint64_t>(dim), c.range);
    group_law_checks(c, dim, s, checks);
    frame_checks(c, dim, s, checks);
    haar_checks(c, dim, checks);
  }

  nlohmann::ordered_json report;
  report["command"] = "group-check";
  report["config_hash"] = config_hash(config, seed);
  report["timestamp"] = opts.timestamp.empty() ? utc_timestamp() : opts.timestamp;
  report["seed"] = seed;
  report["samples"] = c.samples;
  report["all_pass"] = checks.all_pass();
  report["checks"] = checks.to_json();

  CommandResult res;
  res.exit_code = checks.all_pass() ? kSuccess : kAssertionFailure;
  res.output_dir = c.common.output_dir;
  res.files.emplace_back("group-check.json", report.dump(2) + "\n");
  if (opts.emit_plots_csv) res.files.emplace_back("group-check.csv", checks.to_csv());
  res.summary = checks.summary_lines();
  return res;
}

}  // namespace kfuzzy::cli
