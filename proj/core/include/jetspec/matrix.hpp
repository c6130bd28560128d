#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "jetspec/errors.hpp"
#include "jetspec/scalar.hpp"

namespace jetspec {

// Dense row-major matrix over one scalar backend. The algebra element is a
// square matrix; rectangular shapes exist for column vectors acted on by it.
template <Field T>
class Matrix {
public:
  using value_type = T;

  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows);

  static Matrix zero(std::size_t n) { return Matrix(n, n); }
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix column(std::span<const T> v) {
    Matrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = v[i];
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  // Side length; only meaningful for square matrices.
  std::size_t dim() const noexcept { return rows_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> data() const noexcept { return data_; }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o, "+");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o, "-");
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const T& s, Matrix a) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) { return mat_mul(a, b); }

  // Exact entrywise equality; use approx_equal for the float backend.
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

private:
  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw DimensionMismatch(std::string("matrix shapes differ in operator") + op);
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<GaussRational>;
using FloatMatrix = Matrix<Complex>;

template <Field T>
Matrix<T>::Matrix(std::initializer_list<std::initializer_list<T>> rows) : rows_(rows.size()) {
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

template <Field T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b);

// Throws SingularMatrix. Float backend: rejects when the smallest singular
// value is below tol.rank times the largest.
template <Field T>
Matrix<T> mat_inverse(const Matrix<T>& a, const Tolerances& tol = {});

// Exact backend: fraction-free (Bareiss) elimination.
// Float backend: singular values at or below tol.rank * sigma_max count as zero.
template <Field T>
std::size_t kernel_dim(const Matrix<T>& a, const Tolerances& tol = {});

template <Field T>
std::size_t rank(const Matrix<T>& a, const Tolerances& tol = {}) {
  return a.cols() - kernel_dim(a, tol);
}

template <Field T>
Matrix<T> mat_pow(const Matrix<T>& a, unsigned exponent);

template <Field T>
Matrix<T> transpose(const Matrix<T>& a);

// Solves a x = b by LU with partial pivoting, without the singular-value
// screen of mat_inverse. Float only; used on hot quadrature paths.
FloatMatrix solve(const FloatMatrix& a, const FloatMatrix& b);

template <Field T>
double frobenius_norm(const Matrix<T>& a);

template <Field T>
double frobenius_distance(const Matrix<T>& a, const Matrix<T>& b) {
  return frobenius_norm(Matrix<T>(a) -= b);
}

FloatMatrix to_float(const ExactMatrix& a);
inline const FloatMatrix& to_float(const FloatMatrix& a) { return a; }
// Exact conversion (every double is dyadic).
ExactMatrix to_exact(const FloatMatrix& a);

// Block-diagonal direct sum.
template <Field T>
Matrix<T> direct_sum(std::span<const Matrix<T>> blocks);

std::vector<double> singular_values(const FloatMatrix& a);

}  // namespace jetspec
