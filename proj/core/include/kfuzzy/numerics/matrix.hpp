#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

namespace kfuzzy::numerics {

using Complex = std::complex<double>;
using CVector = std::vector<Complex>;

// Dense complex matrix stored in row-major order.
class CMatrix {
 public:
  CMatrix() = default;
  CMatrix(std::size_t rows, std::size_t cols);
  CMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);

  static CMatrix identity(std::size_t n);
  static CMatrix diagonal(std::span<const Complex> d);
  static CMatrix diagonal(std::span<const double> d);
  // Column matrix built from a vector.
  static CMatrix column(std::span<const Complex> v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return data_.empty(); }

  Complex& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Complex& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Complex* data() { return data_.data(); }
  const Complex* data() const { return data_.data(); }
  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Complex> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  CVector col(std::size_t j) const;
  void set_col(std::size_t j, std::span<const Complex> v);

  CMatrix adjoint() const;
  CMatrix transpose() const;
  CMatrix conj() const;
  // Rectangular sub-block starting at (r0, c0).
  CMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;

  Complex trace() const;
  double norm1() const;    // maximum absolute column sum
  double norm_fro() const;
  double norm_max() const;
  bool all_finite() const;

  CMatrix& operator+=(const CMatrix& o);
  CMatrix& operator-=(const CMatrix& o);
  CMatrix& operator*=(Complex s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

CMatrix operator+(CMatrix a, const CMatrix& b);
CMatrix operator-(CMatrix a, const CMatrix& b);
CMatrix operator*(CMatrix a, Complex s);
CMatrix operator*(Complex s, CMatrix a);
CMatrix operator*(const CMatrix& a, const CMatrix& b);
CVector operator*(const CMatrix& a, std::span<const Complex> v);

// [A, B] = AB − BA
CMatrix commutator(const CMatrix& a, const CMatrix& b);

double norm2(std::span<const Complex> v);
// ⟨u, v⟩ = Σ conj(u_i) v_i
Complex dot(std::span<const Complex> u, std::span<const Complex> v);

// Kronecker product A ⊗ B.
CMatrix kron(const CMatrix& a, const CMatrix& b);

}  // namespace kfuzzy::numerics
