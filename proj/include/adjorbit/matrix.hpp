#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "adjorbit/dual.hpp"
#include "adjorbit/errors.hpp"
#include "adjorbit/rational.hpp"

namespace adjorbit {

/// Dense row-major matrix over an exact scalar (Rational or Dual).
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<T> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix data length does not match shape");
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(Rational(1));
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const T> data() const noexcept { return data_; }
  std::span<T> data() noexcept { return data_; }

  bool is_zero() const {
    for (const auto& v : data_) {
      if (!adjorbit::is_zero(v)) return false;
    }
    return true;
  }

  T trace() const {
    require_square("trace");
    T t{};
    for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
    return t;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix& operator+=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    require_same_shape(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }
  Matrix& operator*=(const Rational& s) {
    for (auto& v : data_) v *= s;
    return *this;
  }
  Matrix& operator/=(const Rational& s) {
    for (auto& v : data_) v /= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Rational& s) { return a *= s; }
  friend Matrix operator*(const Rational& s, Matrix a) { return a *= s; }
  friend Matrix operator/(Matrix a, const Rational& s) { return a /= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& v : a.data_) v = -v;
    return a;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix product shape mismatch");
    }
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (adjorbit::is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (adjorbit::is_zero(b(k, j))) continue;
          c(i, j) += aik * b(k, j);
        }
      }
    }
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void require_square(const char* what) const {
    if (!is_square()) throw Error(ErrorKind::NotSquare, std::string(what) + " needs a square matrix");
  }
  void require_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) {
      throw Error(ErrorKind::DimensionMismatch, "matrix shape mismatch");
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using DualMatrix = Matrix<Dual>;
using RatVector = std::vector<Rational>;

/// Matrix commutator ab − ba.
template <class T>
Matrix<T> commutator(const Matrix<T>& a, const Matrix<T>& b) {
  return a * b - b * a;
}

template <class T>
Matrix<T> power(const Matrix<T>& a, std::size_t k) {
  auto result = Matrix<T>::identity(a.rows());
  for (std::size_t i = 0; i < k; ++i) result = result * a;
  return result;
}

/// Lifts a rational matrix into the dual numbers with zero eps part.
DualMatrix lift(const RatMatrix& m);
RatMatrix value_part(const DualMatrix& m);
RatMatrix eps_part(const DualMatrix& m);

/// Single-line rendering "[[a,b],[c,d]]" using canonical rational strings.
std::string to_string(const RatMatrix& m);

/// Column vector helpers (n×1 matrices and RatVector interconvert).
RatMatrix column(std::span<const Rational> v);
RatVector multiply(const RatMatrix& m, std::span<const Rational> v);

/// Unit matrix E_ij of size n×n.
RatMatrix unit_matrix(std::size_t n, std::size_t i, std::size_t j);
RatMatrix diagonal(std::span<const Rational> entries);

}  // namespace adjorbit
