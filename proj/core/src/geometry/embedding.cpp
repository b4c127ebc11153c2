#include "kfuzzy/geometry/embedding.hpp"

#include <cmath>

namespace kfuzzy::geometry {

namespace {

double half_square(const SplitElement& p) {
  double q = 0.0;
  for (double v : p.y()) q += v * v;
  return 0.5 * q;
}

}  // namespace

std::vector<double> embed(const SplitElement& p) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const double et = std::exp(p.t()), q = et * half_square(p);
  std::vector<double> x(d + 1);
  x[0] = std::sinh(p.t()) + q;
  for (std::size_t k = 1; k < d; ++k) x[k] = et * p.y(k - 1);
  x[d] = std::cosh(p.t()) - q;
  return x;
}

std::vector<double> embed_alternate_signs(const SplitElement& p) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const double et = std::exp(p.t()), q = et * half_square(p);
  std::vector<double> x(d + 1);
  x[0] = -std::sinh(p.t()) - q;
  for (std::size_t k = 1; k < d; ++k) x[k] = et * p.y(k - 1);
  x[d] = -std::cosh(p.t()) - q;
  return x;
}

double quadric_residual(const std::vector<double>& x) {
  // (X^D − X⁰)(X^D + X⁰) avoids cancellation between the two large terms
  const std::size_t d = x.size() - 1;
  double r = (x[d] - x[0]) * (x[d] + x[0]) - 1.0;
  for (std::size_t k = 1; k < d; ++k) r += x[k] * x[k];
  return r;
}

double half_space_witness(const std::vector<double>& x) { return x.front() + x.back(); }

RealMatrix embedding_jacobian(const SplitElement& p) {
  const std::size_t d = static_cast<std::size_t>(p.dim());
  const double et = std::exp(p.t()), q = et * half_square(p);
  RealMatrix j(d + 1, d);
  j(0, 0) = std::cosh(p.t()) + q;
  j(d, 0) = std::sinh(p.t()) - q;
  for (std::size_t k = 1; k < d; ++k) {
    const double yk = p.y(k - 1);
    j(0, k) = et * yk;
    j(d, k) = -et * yk;
    j(k, 0) = et * yk;
    j(k, k) = et;
  }
  return j;
}

RealMatrix induced_metric(const SplitElement& p) {
  const RealMatrix j = embedding_jacobian(p);
  const std::size_t n = j.rows();
  std::vector<double> eta(n, -1.0);
  eta[0] = 1.0;
  return j.transpose() * RealMatrix::diagonal(eta) * j;
}

}  // namespace kfuzzy::geometry
