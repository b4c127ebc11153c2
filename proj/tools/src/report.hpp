#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <json.hpp>

namespace kfuzzy::cli {

// One pass/fail line of a check report.
struct Check {
  std::string name;
  int dim = 0;  // 0 when the check is not per dimension
  double value = 0.0;
  double threshold = 0.0;
  bool pass = false;
  std::string note;
};

// value ≤ threshold; NaN fails.
Check make_check(std::string name, int dim, double value, double threshold, std::string note = {});

class CheckList {
 public:
  void add(Check c) { checks_.push_back(std::move(c)); }
  bool all_pass() const;
  const std::vector<Check>& checks() const { return checks_; }
  nlohmann::ordered_json to_json() const;
  std::string to_csv() const;
  std::vector<std::string> summary_lines() const;

 private:
  std::vector<Check> checks_;
};

std::string utc_timestamp();
// FNV-1a over the canonical (sorted-key) config dump and the effective seed.
std::string config_hash(const nlohmann::json& config, std::uint64_t seed);

}  // namespace kfuzzy::cli
