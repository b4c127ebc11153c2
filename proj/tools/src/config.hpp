#pragma once

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "kfuzzy/group/grid_function.hpp"
#include "kfuzzy/tolerances.hpp"

namespace kfuzzy::cli {

using nlohmann::json;

// Malformed or unsupported configuration; maps to exit code 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Typed access to one JSON object. Every key must be read (or explicitly skipped) before
// finish(), which rejects the rest as unknown.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path);

  bool has(const std::string& key) const;
  double number(const std::string& key, double fallback);
  std::int64_t integer(const std::string& key, std::int64_t fallback, std::int64_t min, std::int64_t max);
  bool boolean(const std::string& key, bool fallback);
  std::string string(const std::string& key, const std::string& fallback);
  std::vector<double> numbers(const std::string& key, const std::vector<double>& fallback);
  std::vector<int> integers(const std::string& key, const std::vector<int>& fallback, int min, int max);
  // {"lo": a, "hi": b, "count": n} with a < b and n ≥ min_count.
  group::GridAxis axis(const std::string& key, const group::GridAxis& fallback, std::size_t min_count = 2);
  // Nested object (empty when absent). The caller reads it with its own ObjectReader.
  const json& object(const std::string& key);
  // Array of objects (empty when absent).
  const json& array(const std::string& key);

  void finish() const;
  std::string key_path(const std::string& key) const { return path_ + "." + key; }

 private:
  const json* find(const std::string& key);

  const json& obj_;
  std::string path_;
  std::set<std::string> seen_;
};

group::GridAxis read_axis(const json& j, const std::string& path, std::size_t min_count);

// Overrides of the library tolerance defaults, by field name.
Tolerances read_tolerances(const json& j, const std::string& path);

// Settings shared by every command.
struct CommonConfig {
  std::uint64_t seed = 1;
  std::string output_dir;  // empty: not set in the config
  Tolerances tol;
};

CommonConfig read_common(ObjectReader& r);

}  // namespace kfuzzy::cli
