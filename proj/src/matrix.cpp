#include "qosc/matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "qosc/errors.hpp"

namespace qosc {

namespace {

constexpr std::size_t kParallelThreshold = 32;

void require_same_dim(const Matrix& a, const Matrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix dimensions differ: " + std::to_string(a.dim()) + " vs " +
                    std::to_string(b.dim()));
  }
}

}  // namespace

Matrix Matrix::identity(std::size_t dim) {
  Matrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const complex> entries) {
  Matrix m(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

Matrix& Matrix::operator+=(const Matrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& rhs) {
  require_same_dim(*this, rhs);
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= rhs.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(complex s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator*(const Matrix& lhs, const Matrix& rhs) { return matmul(lhs, rhs); }

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  Matrix c(n);
  const complex* pa = a.data().data();
  const complex* pb = b.data().data();
  complex* pc = c.data().data();
  const auto rows = static_cast<long long>(n);
#pragma omp parallel for schedule(static) if (n >= kParallelThreshold)
  for (long long i = 0; i < rows; ++i) {
    double* __restrict crow = reinterpret_cast<double*>(pc + static_cast<std::size_t>(i) * n);
    const complex* arow = pa + static_cast<std::size_t>(i) * n;
    for (std::size_t k = 0; k < n; ++k) {
      const complex aik = arow[k];
      if (aik == complex{}) continue;
      // (x + iy)(u + iv) in the same operation order as std::complex, so
      // finite inputs give the reference result bit for bit
      const double x = aik.real(), y = aik.imag();
      const double* __restrict brow = reinterpret_cast<const double*>(pb + k * n);
      for (std::size_t j = 0; j < 2 * n; j += 2) {
        crow[j] += x * brow[j] - y * brow[j + 1];
        crow[j + 1] += x * brow[j + 1] + y * brow[j];
      }
    }
  }
  return c;
}

Matrix matmul_reference(const Matrix& a, const Matrix& b) {
  require_same_dim(a, b);
  const std::size_t n = a.dim();
  Matrix c(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      complex acc{};
      for (std::size_t k = 0; k < n; ++k) acc += a(i, k) * b(k, j);
      c(i, j) = acc;
    }
  }
  return c;
}

Matrix matrix_power(const Matrix& a, int exponent) {
  if (exponent < 0) throw Error(ErrorKind::InvalidParameter, "negative matrix power");
  if (exponent == 0) return Matrix::identity(a.dim());
  Matrix result = a;
  for (int e = 1; e < exponent; ++e) result = matmul(result, a);
  return result;
}

Matrix inverse(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix work = a;
  Matrix inv = Matrix::identity(n);
  const double scale = std::max(1.0, max_abs(a));
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    }
    if (std::abs(work(pivot, col)) <= 1e-14 * scale) {
      throw Error(ErrorKind::Numeric, "matrix is singular to working precision");
    }
    if (pivot != col) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(work(pivot, j), work(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const complex d = work(col, col);
    for (std::size_t j = 0; j < n; ++j) {
      work(col, j) /= d;
      inv(col, j) /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col) continue;
      const complex f = work(r, col);
      if (f == complex{}) continue;
      for (std::size_t j = 0; j < n; ++j) {
        work(r, j) -= f * work(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

Matrix adjoint(const Matrix& a) {
  const std::size_t n = a.dim();
  Matrix t(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t(j, i) = std::conj(a(i, j));
  return t;
}

std::vector<complex> apply_vector(const Matrix& a, std::span<const complex> v) {
  if (v.size() != a.dim()) throw Error(ErrorKind::DimensionMismatch, "vector length mismatch");
  std::vector<complex> out(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i) {
    complex acc{};
    for (std::size_t j = 0; j < a.dim(); ++j) acc += a(i, j) * v[j];
    out[i] = acc;
  }
  return out;
}

Matrix submatrix(const Matrix& a, std::span<const std::size_t> index) {
  Matrix s(index.size());
  for (std::size_t i = 0; i < index.size(); ++i)
    for (std::size_t j = 0; j < index.size(); ++j) s(i, j) = a(index[i], index[j]);
  return s;
}

double max_abs(const Matrix& a) {
  double m = 0.0;
  for (const auto& x : a.data()) m = std::max(m, std::abs(x));
  return m;
}

double max_abs(const Matrix& a, std::span<const std::size_t> columns) {
  if (columns.empty()) return max_abs(a);
  double m = 0.0;
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c : columns) m = std::max(m, std::abs(a(r, c)));
  return m;
}

}  // namespace qosc
