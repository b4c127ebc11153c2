#include "kfuzzy/group/elements.hpp"

#include <algorithm>
#include <cmath>

#include "kfuzzy/errors.hpp"

namespace kfuzzy::group {

namespace {

void check_finite(std::span<const double> v, const char* what) {
  if (!std::all_of(v.begin(), v.end(), [](double x) { return std::isfinite(x); }))
    throw InputError(std::string(what) + ": non-finite coordinate");
}

void check_dims(int a, int b) {
  if (a != b) throw DimensionError("group elements of different dimension");
}

}  // namespace

double phi(double x) {
  if (std::abs(x) > 1e-4) return std::expm1(x) / x;
  return 1.0 + x * (1.0 / 2 + x * (1.0 / 6 + x * (1.0 / 24 + x * (1.0 / 120 + x / 720))));
}

ExpElement::ExpElement(std::vector<double> x) : x_(std::move(x)) {
  if (x_.size() < 2) throw DimensionError("ExpElement: dimension must be at least 2");
  check_finite(x_, "ExpElement");
}

SplitElement::SplitElement(double t, std::vector<double> y) : t_(t), y_(std::move(y)) {
  if (y_.empty()) throw DimensionError("SplitElement: dimension must be at least 2");
  check_finite(std::span<const double>(&t_, 1), "SplitElement");
  check_finite(y_, "SplitElement");
}

SplitElement SplitElement::identity(int dim) {
  if (dim < 2) throw DimensionError("SplitElement: dimension must be at least 2");
  return SplitElement(0.0, std::vector<double>(dim - 1, 0.0));
}

ExpElement multiply_exp(const ExpElement& g1, const ExpElement& g2) {
  check_dims(g1.dim(), g2.dim());
  const double a = g1.x0(), c = g2.x0();
  const double pa = phi(a), pc = phi(c), pac = phi(a + c), ea = std::exp(a);
  std::vector<double> x(g1.dim());
  x[0] = a + c;
  for (int k = 1; k < g1.dim(); ++k) x[k] = (pa * g1.coords()[k] + ea * pc * g2.coords()[k]) / pac;
  return ExpElement(std::move(x));
}

SplitElement multiply_split(const SplitElement& g1, const SplitElement& g2) {
  check_dims(g1.dim(), g2.dim());
  const double es = std::exp(-g2.t());
  std::vector<double> y(g1.y().size());
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = es * g1.y(k) + g2.y(k);
  return SplitElement(g1.t() + g2.t(), std::move(y));
}

SplitElement inverse(const SplitElement& g) {
  const double et = std::exp(g.t());
  std::vector<double> y(g.y().size());
  for (std::size_t k = 0; k < y.size(); ++k) y[k] = -et * g.y(k);
  return SplitElement(-g.t(), std::move(y));
}

ExpElement inverse(const ExpElement& g) {
  // g(x)⁻¹ = g(−x) in exponential coordinates
  std::vector<double> x(g.coords().begin(), g.coords().end());
  for (auto& v : x) v = -v;
  return ExpElement(std::move(x));
}

SplitElement to_split(const ExpElement& g) {
  const double f = phi(-g.x0());
  std::vector<double> y(g.spatial().begin(), g.spatial().end());
  for (auto& v : y) v *= f;
  return SplitElement(g.x0(), std::move(y));
}

ExpElement from_split(const SplitElement& g) {
  const double f = phi(-g.t());
  std::vector<double> x(g.dim());
  x[0] = g.t();
  for (std::size_t k = 0; k < g.y().size(); ++k) x[k + 1] = g.y(k) / f;
  return ExpElement(std::move(x));
}

double modular(const SplitElement& g) { return std::exp(-(g.dim() - 1) * g.t()); }

double HaarData::right_density(double t) const { return std::exp((dim - 1) * t); }

double HaarData::modular(double t) const { return std::exp(-(dim - 1) * t); }

SplitElement to_unit_scale(const SplitElement& g, double kappa) {
  if (!(kappa > 0.0)) throw PreconditionError("to_unit_scale: kappa must be positive");
  return SplitElement(kappa * g.t(), std::vector<double>(g.y().begin(), g.y().end()));
}

SplitElement from_unit_scale(const SplitElement& g, double kappa) {
  if (!(kappa > 0.0)) throw PreconditionError("from_unit_scale: kappa must be positive");
  return SplitElement(g.t() / kappa, std::vector<double>(g.y().begin(), g.y().end()));
}

}  // namespace kfuzzy::group
