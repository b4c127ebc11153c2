#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "commands.hpp"
#include "config.hpp"
#include "kfuzzy/errors.hpp"
#include "kfuzzy/io/report_io.hpp"

namespace kfuzzy::cli {

namespace {

json load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  json j;
  try {
    j = json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw ConfigError("config file " + path + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config file " + path + ": top level must be an object");
  return j;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Group, geometry and fuzzy-spectrum checks for the kappa-Minkowski group"};
  app.name("kappa-fuzzy");
  app.require_subcommand(1, 1);

  std::string config_path;
  std::string out_dir;
  std::uint64_t seed = 0;
  bool emit_csv = false;
  struct Entry {
    const char* name;
    const char* help;
    CommandResult (*run)(const json&, const RunOptions&);
  };
  const Entry entries[] = {
      {"group-check", "Group law, frames and Haar measure invariants", &cmd_group_check},
      {"geometry-check", "Metric reduction, embedding and classical mode residuals", &cmd_geometry_check},
      {"fuzzy-spectrum", "Fuzzy Laplacian spectrum compared with classical modes", &cmd_fuzzy_spectrum},
  };
  std::vector<CLI::Option*> seed_opts;
  for (const auto& e : entries) {
    auto* sub = app.add_subcommand(e.name, e.help);
    sub->add_option("--config", config_path, "JSON config file")->required();
    sub->add_option("--out", out_dir, "Output directory (default: config output_dir, else ./kfuzzy-out)");
    seed_opts.push_back(sub->add_option("--seed", seed, "Overrides the config seed"));
    sub->add_flag("--emit-plots-csv", emit_csv, "Also write gnuplot-ready CSV tables");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? kSuccess : kUsageError;
  }

  const Entry* chosen = nullptr;
  for (const auto& e : entries)
    if (app.got_subcommand(e.name)) chosen = &e;

  RunOptions opts;
  opts.emit_plots_csv = emit_csv;
  for (auto* o : seed_opts)
    if (o->count() > 0) opts.seed = seed;

  CommandResult result;
  try {
    result = chosen->run(load_config(config_path), opts);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kUsageError;
  } catch (const MemoryGuardError& e) {
    err << "refused: " << e.what() << "\n";
    return kUsageError;
  } catch (const PreconditionError& e) {
    err << "refused: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kAssertionFailure;
  }

  std::filesystem::path dir = !out_dir.empty()                ? std::filesystem::path(out_dir)
                              : !result.output_dir.empty()    ? std::filesystem::path(result.output_dir)
                                                              : std::filesystem::path("kfuzzy-out");
  try {
    for (const auto& [name, content] : result.files) io::write_atomic(dir / name, content);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kAssertionFailure;
  }
  for (const auto& line : result.summary) out << line << "\n";
  out << "wrote " << result.files.size() << " file(s) to " << dir.string() << "\n";
  return result.exit_code;
}

}  // namespace kfuzzy::cli
