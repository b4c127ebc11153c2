#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace kfuzzy::cli {

enum ExitCode { kSuccess = 0, kAssertionFailure = 1, kUsageError = 2 };

struct RunOptions {
  std::optional<std::uint64_t> seed;  // overrides the config seed
  bool emit_plots_csv = false;
  std::string timestamp;              // empty: current UTC time
};

struct CommandResult {
  int exit_code = kSuccess;
  std::string output_dir;  // from the config; empty when not set there
  std::vector<std::pair<std::string, std::string>> files;  // file name, content
  std::vector<std::string> summary;                        // human-readable lines for stdout
};

// Each command validates the config (throwing ConfigError), runs, and returns the files to write.
CommandResult cmd_group_check(const nlohmann::json& config, const RunOptions& opts);
CommandResult cmd_geometry_check(const nlohmann::json& config, const RunOptions& opts);
CommandResult cmd_fuzzy_spectrum(const nlohmann::json& config, const RunOptions& opts);

// kappa-fuzzy <command> --config path.json [--out dir] [--seed n] [--emit-plots-csv]
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace kfuzzy::cli
