#include "kfuzzy/io/report_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <system_error>

#include <json.hpp>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::io {

namespace {

using nlohmann::ordered_json;

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

ordered_json complex_json(std::complex<double> z) { return ordered_json{{"re", z.real()}, {"im", z.imag()}}; }

// JSON has no infinities; they are written as null.
ordered_json finite_or_null(double v) { return std::isfinite(v) ? ordered_json(v) : ordered_json(nullptr); }

}  // namespace

void write_atomic(const std::filesystem::path& path, std::string_view content) {
  const auto dir = path.has_parent_path() ? path.parent_path() : std::filesystem::path(".");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  const auto tmp = dir / ("." + path.filename().string() + ".tmp");
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("write_atomic: cannot open " + tmp.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
    if (!out) throw InputError("write_atomic: write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw InputError("write_atomic: rename to " + path.string() + " failed: " + ec.message());
}

std::uint64_t fnv1a(std::string_view data) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : data) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string grid_function_csv(const group::GridFunction& f, const group::GridFunction* residual,
                              std::size_t stride) {
  if (stride == 0) throw DimensionError("grid_function_csv: stride must be positive");
  if (residual && residual->size() != f.size()) throw DimensionError("grid_function_csv: residual grid differs");
  std::string out = "t";
  for (int k = 1; k < f.dim(); ++k) out += ",y" + std::to_string(k);
  out += ",re,im";
  if (residual) out += ",residual_re,residual_im";
  out += '\n';
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (stride > 1) {
      bool keep = true;
      for (std::size_t idx : f.multi_index(i)) keep = keep && idx % stride == 0;
      if (!keep) continue;
    }
    const auto p = f.point(i);
    out += num(p.t());
    for (double y : p.y()) out += "," + num(y);
    out += "," + num(f.values()[i].real()) + "," + num(f.values()[i].imag());
    if (residual) out += "," + num(residual->values()[i].real()) + "," + num(residual->values()[i].imag());
    out += '\n';
  }
  return out;
}

std::string grid_function_header_json(const group::GridFunction& f, std::string_view description) {
  ordered_json j;
  j["description"] = description;
  j["layout"] = "row-major, t slowest";
  ordered_json axes = ordered_json::array();
  for (std::size_t a = 0; a < f.axes().size(); ++a) {
    const auto& ax = f.axes()[a];
    axes.push_back({{"name", a == 0 ? std::string("t") : "y" + std::to_string(a)},
                    {"lo", ax.lo},
                    {"hi", ax.hi},
                    {"count", ax.count}});
  }
  j["axes"] = axes;
  return j.dump(2) + "\n";
}

std::string mode_summary_csv(const fuzzy::SpectralReport& report) {
  std::string out =
      "index,eigen_re,eigen_im,mu2_re,mu2_im,nu_re,nu_im,low_block_weight,matched,overlap,lambda,kind,"
      "residual,classical_residual,mu2_fit_re,mu2_fit_im\n";
  for (const auto& m : report.modes) {
    out += std::to_string(m.index) + "," + num(m.eigenvalue.real()) + "," + num(m.eigenvalue.imag()) + "," +
           num(m.mu2.real()) + "," + num(m.mu2.imag()) + "," + num(m.nu.real()) + "," + num(m.nu.imag()) + "," +
           num(m.low_block_weight) + "," + (m.matched ? "1" : "0") + "," + num(m.overlap) + "," + num(m.lambda) +
           "," + std::to_string(m.kind) + "," + num(m.residual) + "," + num(m.classical_residual) + "," +
           num(m.mu2_fit.real()) + "," + num(m.mu2_fit.imag()) + "\n";
  }
  return out;
}

std::string spectral_report_json(const fuzzy::SpectralReport& report, std::string_view config_hash,
                                 std::string_view timestamp) {
  ordered_json j;
  j["config_hash"] = config_hash;
  j["timestamp"] = timestamp;
  j["truncation"] = report.n;
  j["dimension"] = report.dim;
  j["best_overlap"] = report.best_overlap;
  j["median_residual"] = finite_or_null(report.median_residual);
  j["unconverged_eigenpairs"] = report.unconverged;
  j["truncation_deviation"] = report.truncation_deviation;
  ordered_json modes = ordered_json::array();
  for (const auto& m : report.modes) {
    modes.push_back({{"index", m.index},
                     {"eigenvalue", complex_json(m.eigenvalue)},
                     {"mu2", complex_json(m.mu2)},
                     {"nu", complex_json(m.nu)},
                     {"low_block_weight", m.low_block_weight},
                     {"matched", m.matched},
                     {"overlap", m.overlap},
                     {"lambda", m.lambda},
                     {"kind", m.kind},
                     {"scale", complex_json(m.scale)},
                     {"residual", finite_or_null(m.residual)},
                     {"classical_residual", finite_or_null(m.classical_residual)},
                     {"mu2_fit", complex_json(m.mu2_fit)}});
  }
  j["modes"] = modes;
  ordered_json ev = ordered_json::array();
  for (const auto& v : report.eigenvalues) ev.push_back(complex_json(v));
  j["eigenvalues"] = ev;
  return j.dump(2) + "\n";
}

}  // namespace kfuzzy::io
