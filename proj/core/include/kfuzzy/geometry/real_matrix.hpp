#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace kfuzzy::geometry {

// Small dense real matrix, row-major.
class RealMatrix {
 public:
  RealMatrix() = default;
  RealMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0.0) {}
  RealMatrix(std::initializer_list<std::initializer_list<double>> rows);
  static RealMatrix identity(std::size_t n);
  static RealMatrix diagonal(const std::vector<double>& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  RealMatrix transpose() const;
  double max_abs() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> a_;
};

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator-(const RealMatrix& a, const RealMatrix& b);
RealMatrix operator*(double s, const RealMatrix& a);
// max |a − b| / max(|b|, floor)
double relative_max_diff(const RealMatrix& a, const RealMatrix& b, double floor = 1e-300);

}  // namespace kfuzzy::geometry
