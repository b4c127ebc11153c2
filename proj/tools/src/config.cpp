#include "config.hpp"

#include <cmath>
#include <utility>

namespace kfuzzy::cli {

namespace {

const std::pair<const char*, double Tolerances::*> kRealTolerances[] = {
    {"hermitian_check", &Tolerances::hermitian_check},
    {"jacobi_offdiag", &Tolerances::jacobi_offdiag},
    {"qr_deflation", &Tolerances::qr_deflation},
    {"eig_residual", &Tolerances::eig_residual},
    {"ill_conditioned", &Tolerances::ill_conditioned},
    {"defective", &Tolerances::defective},
    {"svd_truncation", &Tolerances::svd_truncation},
    {"bessel_series_tail", &Tolerances::bessel_series_tail},
    {"near_integer", &Tolerances::near_integer},
    {"integer_limit_step", &Tolerances::integer_limit_step},
    {"phi_series_cutoff", &Tolerances::phi_series_cutoff},
    {"degenerate_det", &Tolerances::degenerate_det},
    {"edge_mass", &Tolerances::edge_mass},
    {"unit_norm", &Tolerances::unit_norm},
};

const std::pair<const char*, int Tolerances::*> kIntTolerances[] = {
    {"qr_iterations_per_dim", &Tolerances::qr_iterations_per_dim},
    {"max_superoperator_dim", &Tolerances::max_superoperator_dim},
    {"max_truncation_d3", &Tolerances::max_truncation_d3},
};

}  // namespace

ObjectReader::ObjectReader(const json& obj, std::string path) : obj_(obj), path_(std::move(path)) {
  if (!obj_.is_object()) throw ConfigError(path_ + ": expected an object");
}

bool ObjectReader::has(const std::string& key) const { return obj_.contains(key); }

const json* ObjectReader::find(const std::string& key) {
  seen_.insert(key);
  auto it = obj_.find(key);
  return it == obj_.end() ? nullptr : &*it;
}

double ObjectReader::number(const std::string& key, double fallback) {
  const json* v = find(key);
  if (!v) return fallback;
  if (!v->is_number()) throw ConfigError(key_path(key) + ": expected a number");
  const double x = v->get<double>();
  if (!std::isfinite(x)) throw ConfigError(key_path(key) + ": must be finite");
  return x;
}

std::int64_t ObjectReader::integer(const std::string& key, std::int64_t fallback, std::int64_t min, std::int64_t max) {
  const json* v = find(key);
  if (!v) return fallback;
  if (!v->is_number_integer()) throw ConfigError(key_path(key) + ": expected an integer");
  const auto x = v->get<std::int64_t>();
  if (x < min || x > max)
    throw ConfigError(key_path(key) + ": " + std::to_string(x) + " outside [" + std::to_string(min) + ", " +
                      std::to_string(max) + "]");
  return x;
}

bool ObjectReader::boolean(const std::string& key, bool fallback) {
  const json* v = find(key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw ConfigError(key_path(key) + ": expected true or false");
  return v->get<bool>();
}

std::string ObjectReader::string(const std::string& key, const std::string& fallback) {
  const json* v = find(key);
  if (!v) return fallback;
  if (!v->is_string()) throw ConfigError(key_path(key) + ": expected a string");
  return v->get<std::string>();
}

std::vector<double> ObjectReader::numbers(const std::string& key, const std::vector<double>& fallback) {
  const json* v = find(key);
  if (!v) return fallback;
  if (!v->is_array()) throw ConfigError(key_path(key) + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& e : *v) {
    if (!e.is_number()) throw ConfigError(key_path(key) + ": expected an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<int> ObjectReader::integers(const std::string& key, const std::vector<int>& fallback, int min, int max) {
  const json* v = find(key);
  if (!v) return fallback;
  if (!v->is_array() || v->empty()) throw ConfigError(key_path(key) + ": expected a non-empty array of integers");
  std::vector<int> out;
  for (const auto& e : *v) {
    if (!e.is_number_integer()) throw ConfigError(key_path(key) + ": expected integers");
    const auto x = e.get<std::int64_t>();
    if (x < min || x > max)
      throw ConfigError(key_path(key) + ": entries must lie in [" + std::to_string(min) + ", " + std::to_string(max) +
                        "]");
    out.push_back(static_cast<int>(x));
  }
  return out;
}

group::GridAxis ObjectReader::axis(const std::string& key, const group::GridAxis& fallback, std::size_t min_count) {
  const json* v = find(key);
  if (!v) return fallback;
  return read_axis(*v, key_path(key), min_count);
}

const json& ObjectReader::object(const std::string& key) {
  static const json empty = json::object();
  const json* v = find(key);
  if (!v) return empty;
  if (!v->is_object()) throw ConfigError(key_path(key) + ": expected an object");
  return *v;
}

const json& ObjectReader::array(const std::string& key) {
  static const json empty = json::array();
  const json* v = find(key);
  if (!v) return empty;
  if (!v->is_array()) throw ConfigError(key_path(key) + ": expected an array");
  return *v;
}

void ObjectReader::finish() const {
  for (const auto& [key, value] : obj_.items()) {
    if (!seen_.count(key)) throw ConfigError(key_path(key) + ": unknown key");
  }
}

group::GridAxis read_axis(const json& j, const std::string& path, std::size_t min_count) {
  ObjectReader r(j, path);
  if (!r.has("lo") || !r.has("hi") || !r.has("count")) throw ConfigError(path + ": axis needs lo, hi and count");
  group::GridAxis a;
  a.lo = r.number("lo", 0.0);
  a.hi = r.number("hi", 1.0);
  a.count = static_cast<std::size_t>(r.integer("count", 2, static_cast<std::int64_t>(min_count), 1 << 16));
  r.finish();
  if (!(a.hi > a.lo)) throw ConfigError(path + ": hi must exceed lo");
  return a;
}

Tolerances read_tolerances(const json& j, const std::string& path) {
  Tolerances tol;
  ObjectReader r(j, path);
  for (const auto& [name, member] : kRealTolerances) {
    const double v = r.number(name, tol.*member);
    if (!(v > 0.0)) throw ConfigError(r.key_path(name) + ": must be positive");
    tol.*member = v;
  }
  for (const auto& [name, member] : kIntTolerances) {
    tol.*member = static_cast<int>(r.integer(name, tol.*member, 1, 1 << 24));
  }
  r.finish();
  return tol;
}

CommonConfig read_common(ObjectReader& r) {
  CommonConfig c;
  c.seed = static_cast<std::uint64_t>(r.integer("seed", 1, 0, INT64_MAX));
  c.output_dir = r.string("output_dir", "");
  c.tol = read_tolerances(r.object("tolerances"), r.key_path("tolerances"));
  return c;
}

}  // namespace kfuzzy::cli
