#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qosc/qcalc.hpp"

namespace qosc {

/// Dense square complex matrix, row-major.
class Matrix {
 public:
  Matrix() = default;
  explicit Matrix(std::size_t dim) : dim_(dim), data_(dim * dim) {}

  static Matrix zero(std::size_t dim) { return Matrix(dim); }
  static Matrix identity(std::size_t dim);
  static Matrix diagonal(std::span<const complex> entries);

  std::size_t dim() const noexcept { return dim_; }

  complex& operator()(std::size_t r, std::size_t c) { return data_[r * dim_ + c]; }
  const complex& operator()(std::size_t r, std::size_t c) const { return data_[r * dim_ + c]; }

  std::span<complex> data() noexcept { return data_; }
  std::span<const complex> data() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& rhs);
  Matrix& operator-=(const Matrix& rhs);
  Matrix& operator*=(complex s);

  friend Matrix operator+(Matrix lhs, const Matrix& rhs) { return lhs += rhs; }
  friend Matrix operator-(Matrix lhs, const Matrix& rhs) { return lhs -= rhs; }
  friend Matrix operator*(complex s, Matrix m) { return m *= s; }
  friend Matrix operator*(const Matrix& lhs, const Matrix& rhs);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<complex> data_;
};

/// Product kernel: rows distributed over OpenMP threads, zero entries of the
/// left factor skipped. Every output entry accumulates over k in ascending
/// order, so results are bit-identical to matmul_reference and independent of
/// the thread count.
Matrix matmul(const Matrix& a, const Matrix& b);

/// Serial textbook triple loop, kept as the test oracle for matmul.
Matrix matmul_reference(const Matrix& a, const Matrix& b);

/// a^e for e >= 0 by repeated multiplication (a^0 = identity).
Matrix matrix_power(const Matrix& a, int exponent);

/// Gauss-Jordan inverse with partial pivoting; throws Numeric when singular.
Matrix inverse(const Matrix& a);

Matrix adjoint(const Matrix& a);

std::vector<complex> apply_vector(const Matrix& a, std::span<const complex> v);

/// Rows and columns restricted to `index` (in the given order).
Matrix submatrix(const Matrix& a, std::span<const std::size_t> index);

double max_abs(const Matrix& a);

/// Max-abs entry over the listed columns only (all columns when empty).
double max_abs(const Matrix& a, std::span<const std::size_t> columns);

}  // namespace qosc
