#include <cmath>
#include <cstdio>

#include "commands.hpp"
#include "config.hpp"
#include "kfuzzy/errors.hpp"
#include "kfuzzy/fuzzy/laplacian.hpp"
#include "kfuzzy/geometry/laplace.hpp"
#include "kfuzzy/io/report_io.hpp"
#include "report.hpp"

namespace kfuzzy::cli {

namespace {

using group::GridAxis;

struct SpectrumConfig {
  CommonConfig common;
  int dim = 2;
  std::size_t n = 16;
  std::vector<double> lambda;
  std::vector<GridAxis> lattice;
  fuzzy::ModeCompareOptions compare;
  double gate_overlap = 0.0;           // 0: off
  double gate_residual = INFINITY;     // infinity: off
};

SpectrumConfig read_config(const json& j) {
  ObjectReader r(j, "config");
  SpectrumConfig c;
  c.common = read_common(r);
  c.dim = static_cast<int>(r.integer("dimension", 2, 2, 4));
  c.n = static_cast<std::size_t>(r.integer("truncation", 16, 2, 4096));
  const std::string carrier = r.string("carrier", "oscillator");
  if (carrier != "oscillator") throw ConfigError("config.carrier: only \"oscillator\" is supported");

  std::vector<double> unit(static_cast<std::size_t>(c.dim - 1), 0.0);
  unit[0] = 1.0;
  c.lambda = r.numbers("lambda", unit);
  if (c.lambda.size() != unit.size()) throw ConfigError("config.lambda: needs dimension − 1 entries");
  double norm = 0.0;
  for (double v : c.lambda) norm += v * v;
  if (std::abs(std::sqrt(norm) - 1.0) > 1e-12) throw ConfigError("config.lambda: must be a unit vector");

  if (r.has("lattice")) {
    const json& axes = r.array("lattice");
    if (axes.size() != static_cast<std::size_t>(c.dim)) throw ConfigError("config.lattice: needs one axis per dimension");
    for (std::size_t a = 0; a < axes.size(); ++a)
      c.lattice.push_back(read_axis(axes[a], "config.lattice[" + std::to_string(a) + "]", 9));
  } else {
    c.lattice.push_back({-0.5, 0.5, 41});
    for (int k = 1; k < c.dim; ++k) c.lattice.push_back({-1.0, 1.0, c.dim == 2 ? std::size_t{41} : std::size_t{13}});
  }

  ObjectReader cmp(r.object("compare"), "config.compare");
  c.compare.candidates = static_cast<std::size_t>(cmp.integer("candidates", 8, 1, 1000));
  c.compare.lambda_min = cmp.number("lambda_min", c.compare.lambda_min);
  c.compare.lambda_max = cmp.number("lambda_max", c.compare.lambda_max);
  if (!(c.compare.lambda_min > 0.0 && c.compare.lambda_max > c.compare.lambda_min))
    throw ConfigError("config.compare: need 0 < lambda_min < lambda_max");
  c.compare.lambda_points = static_cast<std::size_t>(cmp.integer("lambda_points", 300, 2, 100000));
  c.compare.overlap_floor = cmp.number("overlap_floor", c.compare.overlap_floor);
  cmp.finish();

  ObjectReader gates(r.object("gates"), "config.gates");
  c.gate_overlap = gates.number("min_best_overlap", 0.0);
  c.gate_residual = gates.number("max_median_residual", 1e300);
  gates.finish();
  r.finish();

  // Same limits as the superoperator assembly, checked before any work is done.
  const double n2 = static_cast<double>(c.n) * static_cast<double>(c.n);
  if (c.dim == 2 && n2 > c.common.tol.max_superoperator_dim)
    throw MemoryGuardError("truncation N = " + std::to_string(c.n) + " needs an N² = " + std::to_string(c.n * c.n) +
                           " superoperator; the limit is " + std::to_string(c.common.tol.max_superoperator_dim));
  if (c.dim >= 3 && c.n > static_cast<std::size_t>(c.common.tol.max_truncation_d3))
    throw MemoryGuardError("truncation N = " + std::to_string(c.n) + " exceeds the D ≥ 3 limit " +
                           std::to_string(c.common.tol.max_truncation_d3));
  return c;
}

}  // namespace

CommandResult cmd_fuzzy_spectrum(const json& config, const RunOptions& opts) {
  const SpectrumConfig c = read_config(config);
  const std::uint64_t seed = opts.seed.value_or(c.common.seed);
  const std::string hash = config_hash(config, seed);
  const std::string stamp = opts.timestamp.empty() ? utc_timestamp() : opts.timestamp;
  CommandResult res;
  res.output_dir = c.common.output_dir;

  const representation::OscillatorTruncation osc(c.n);
  const auto ops = representation::jordan_schwinger(osc, c.lambda);
  fuzzy::FuzzySpectrum spectrum;
  try {
    spectrum = fuzzy::solve_fuzzy_spectrum(ops, c.common.tol);
  } catch (const ConvergenceError& e) {
    nlohmann::ordered_json report;
    report["command"] = "fuzzy-spectrum";
    report["config_hash"] = hash;
    report["timestamp"] = stamp;
    report["error"] = e.what();
    res.exit_code = kAssertionFailure;
    res.files.emplace_back("fuzzy-spectrum.json", report.dump(2) + "\n");
    res.summary.push_back(std::string("FAIL eigensolver: ") + e.what());
    return res;
  }
  const auto family = fuzzy::CoherentFamily::from_operators(ops, fuzzy::oscillator_ground_state(c.n), c.lattice);
  const auto report = fuzzy::mode_compare(spectrum, family, c.compare);

  res.files.emplace_back("fuzzy-spectrum.json", io::spectral_report_json(report, hash, stamp));
  res.files.emplace_back("fuzzy-spectrum-modes.csv", io::mode_summary_csv(report));
  if (opts.emit_plots_csv) {
    for (const auto& m : report.modes) {
      const auto lap = geometry::laplace_apply(m.samples, m.mu2);
      const std::string base = "fuzzy-mode-" + std::to_string(m.index);
      res.files.emplace_back(base + ".csv", io::grid_function_csv(m.samples, &lap.residual));
      res.files.emplace_back(base + ".json", io::grid_function_header_json(m.samples, "dequantized eigen-matrix"));
    }
  }

  char buf[160];
  std::snprintf(buf, sizeof buf, "N=%zu D=%d best overlap %.4f, median residual %.3e, unconverged %zu", report.n,
                report.dim, report.best_overlap, report.median_residual, report.unconverged);
  res.summary.emplace_back(buf);
  bool ok = report.unconverged == 0;
  if (report.unconverged > 0) res.summary.emplace_back("FAIL eigensolver flagged unconverged eigenpairs");
  if (report.best_overlap < c.gate_overlap) {
    ok = false;
    res.summary.emplace_back("FAIL best overlap below config.gates.min_best_overlap");
  }
  if (!(report.median_residual <= c.gate_residual)) {
    ok = false;
    res.summary.emplace_back("FAIL median residual above config.gates.max_median_residual");
  }
  res.exit_code = ok ? kSuccess : kAssertionFailure;
  return res;
}

}  // namespace kfuzzy::cli
