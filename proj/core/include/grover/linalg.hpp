#pragma once

#include <stdexcept>
#include <vector>

#include "grover/matrix.hpp"
#include "grover/polynomial.hpp"

namespace grover {

/// Fraction-free (Bareiss) determinant; every intermediate stays integral.
Integer bareiss_determinant(IntegerMatrix m);

/// det(x I - A) for a square integer matrix. Evaluates the determinant at
/// x = 0..n by Bareiss elimination and interpolates, so no rational
/// intermediate ever appears in the elimination itself.
IntPolynomial characteristic_polynomial(const IntegerMatrix& a);

/// Basis of the right nullspace {x : M x = 0} over the field T, from the
/// reduced row echelon form. Free variables are set to 1 in turn.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m) {
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(m(p, c))) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    T inv = T(T(1) / m(r, c));
    for (std::size_t j = c; j < cols; ++j) m(r, j) = T(m(r, j) * inv);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || is_zero(m(i, c))) continue;
      T f = m(i, c);
      for (std::size_t j = c; j < cols; ++j) m(i, j) = T(m(i, j) - T(f * m(r, j)));
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(cols, T(0));
    v[free] = T(1);
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = T(-m(i, free));
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Solution of A x = b for square invertible A over the field T
/// (Gauss-Jordan); throws std::domain_error if A is singular.
template <class T>
std::vector<T> solve(Matrix<T> a, std::vector<T> b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || b.size() != n) throw std::invalid_argument("solve: dimension mismatch");
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(a(p, c))) ++p;
    if (p == n) throw std::domain_error("solve: singular matrix");
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(c, j));
      std::swap(b[p], b[c]);
    }
    T inv = T(T(1) / a(c, c));
    for (std::size_t j = c; j < n; ++j) a(c, j) = T(a(c, j) * inv);
    b[c] = T(b[c] * inv);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(a(i, c))) continue;
      T f = a(i, c);
      for (std::size_t j = c; j < n; ++j) a(i, j) = T(a(i, j) - T(f * a(c, j)));
      b[i] = T(b[i] - T(f * b[c]));
    }
  }
  return b;
}

}  // namespace grover
