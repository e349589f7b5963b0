#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grover/rational.hpp"

namespace grover {

/// Dense row-major matrix with optional row/column labels (vertex or arc
/// names). Labels do not take part in arithmetic or equality.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    t.row_labels = col_labels;
    t.col_labels = row_labels;
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix dimension mismatch");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          const T& bkj = b(k, j);
          if (is_zero(bkj)) continue;
          out(i, j) += aik * bkj;
        }
      }
    }
    out.row_labels = a.row_labels;
    out.col_labels = b.col_labels;
    return out;
  }

  friend Matrix operator*(const T& s, Matrix m) {
    for (auto& v : m.data_) v = T(s * v);
    return m;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
    return a;
  }
  friend Matrix operator-(Matrix a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix dimension mismatch");
    for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
    return a;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  std::vector<T> apply(const std::vector<T>& x) const {
    if (x.size() != cols_) throw std::invalid_argument("vector dimension mismatch");
    std::vector<T> y(rows_, T(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j)) && !is_zero(x[j])) y[i] += (*this)(i, j) * x[j];
    return y;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using IntegerMatrix = Matrix<Integer>;

/// Block Kronecker product: (L (x) M)[(i,k),(j,l)] = L[i,j] * M[k,l], with the
/// row index of L most significant.
template <class T>
Matrix<T> kronecker(const Matrix<T>& l, const Matrix<T>& m) {
  Matrix<T> out(l.rows() * m.rows(), l.cols() * m.cols());
  for (std::size_t i = 0; i < l.rows(); ++i)
    for (std::size_t j = 0; j < l.cols(); ++j) {
      if (is_zero(l(i, j))) continue;
      for (std::size_t k = 0; k < m.rows(); ++k)
        for (std::size_t q = 0; q < m.cols(); ++q) out(i * m.rows() + k, j * m.cols() + q) = l(i, j) * m(k, q);
    }
  return out;
}

}  // namespace grover
