#include "report.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>

#include "kfuzzy/io/report_io.hpp"

namespace kfuzzy::cli {

Check make_check(std::string name, int dim, double value, double threshold, std::string note) {
  Check c{std::move(name), dim, value, threshold, false, std::move(note)};
  c.pass = std::isfinite(value) && value <= threshold;
  return c;
}

bool CheckList::all_pass() const {
  for (const auto& c : checks_)
    if (!c.pass) return false;
  return true;
}

nlohmann::ordered_json CheckList::to_json() const {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& c : checks_) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    if (c.dim > 0) j["dimension"] = c.dim;
    j["max_deviation"] = std::isfinite(c.value) ? nlohmann::ordered_json(c.value) : nlohmann::ordered_json(nullptr);
    j["threshold"] = c.threshold;
    j["pass"] = c.pass;
    if (!c.note.empty()) j["note"] = c.note;
    arr.push_back(std::move(j));
  }
  return arr;
}

std::string CheckList::to_csv() const {
  std::string out = "name,dimension,max_deviation,threshold,pass\n";
  char buf[64];
  for (const auto& c : checks_) {
    out += c.name + "," + std::to_string(c.dim) + ",";
    std::snprintf(buf, sizeof buf, "%.17g,%.17g,", c.value, c.threshold);
    out += buf;
    out += c.pass ? "1\n" : "0\n";
  }
  return out;
}

std::vector<std::string> CheckList::summary_lines() const {
  std::vector<std::string> lines;
  char buf[256];
  for (const auto& c : checks_) {
    std::snprintf(buf, sizeof buf, "%-4s %-32s D=%d  %.3e (threshold %.1e)", c.pass ? "PASS" : "FAIL",
                  c.name.c_str(), c.dim, c.value, c.threshold);
    lines.emplace_back(buf);
  }
  return lines;
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string config_hash(const nlohmann::json& config, std::uint64_t seed) {
  return io::hash_hex(io::fnv1a(config.dump() + "|seed=" + std::to_string(seed)));
}

}  // namespace kfuzzy::cli
