#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "grover/rational.hpp"

namespace grover {

/// Dense univariate polynomial, coefficients stored low degree first.
/// Invariant: no trailing zero coefficients, so the zero polynomial is empty.
template <class T>
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<T> coeffs) : c_(coeffs) { trim(); }

  static Polynomial constant(const T& v) { return Polynomial(std::vector<T>{v}); }
  static Polynomial monomial(const T& v, std::size_t degree) {
    std::vector<T> c(degree + 1, T(0));
    c[degree] = v;
    return Polynomial(std::move(c));
  }
  /// x - root
  static Polynomial linear_root(const T& root) { return Polynomial(std::vector<T>{T(-root), T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<T>& coefficients() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const { return c_.back(); }

  T evaluate(const T& x) const {
    T acc(0);
    for (std::size_t i = c_.size(); i-- > 0;) {
      acc = T(acc * x);
      acc = T(acc + c_[i]);
    }
    return acc;
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = T(c_[i] + o.c_[i]);
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = T(c_[i] - o.c_[i]);
    trim();
    return *this;
  }
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) { return Polynomial() - a; }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.c_.empty() || b.c_.empty()) return {};
    std::vector<T> out(a.c_.size() + b.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] = T(out[i + j] + T(a.c_[i] * b.c_[j]));
    }
    return Polynomial(std::move(out));
  }
  friend Polynomial operator*(const T& s, const Polynomial& p) {
    std::vector<T> out;
    out.reserve(p.c_.size());
    for (const auto& v : p.c_) out.push_back(T(s * v));
    return Polynomial(std::move(out));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

  /// Quotient and remainder; requires exact division of T by the leading
  /// coefficient of the divisor (a field, or a monic divisor).
  std::pair<Polynomial, Polynomial> divmod(const Polynomial& d) const {
    if (d.is_zero_poly()) throw std::domain_error("polynomial division by zero");
    std::vector<T> rem = c_;
    if (rem.size() < d.c_.size()) return {Polynomial(), *this};
    std::vector<T> quot(rem.size() - d.c_.size() + 1, T(0));
    const T& lead = d.c_.back();
    for (std::size_t k = quot.size(); k-- > 0;) {
      T q = T(rem[k + d.c_.size() - 1] / lead);
      quot[k] = q;
      if (is_zero(q)) continue;
      for (std::size_t j = 0; j < d.c_.size(); ++j) rem[k + j] = T(rem[k + j] - T(q * d.c_[j]));
    }
    rem.resize(d.c_.size() - 1);
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
  }

  Polynomial monic() const {
    if (c_.empty()) return {};
    T inv = T(T(1) / c_.back());
    return inv * *this;
  }

  /// p(s * x)
  Polynomial scale_argument(const T& s) const {
    std::vector<T> out = c_;
    T pw(1);
    for (auto& v : out) {
      v = T(v * pw);
      pw = T(pw * s);
    }
    return Polynomial(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

using IntPolynomial = Polynomial<Integer>;
using RationalPolynomial = Polynomial<Rational>;

RationalPolynomial to_rational(const IntPolynomial& p);
/// Throws if any coefficient is non-integral.
IntPolynomial to_integer(const RationalPolynomial& p);

/// Greatest common divisor, normalized monic.
RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b);

/// Dividing `p` by `d` as many times as exact; returns the multiplicity and
/// leaves the cofactor in `p`.
int divide_out(RationalPolynomial& p, const RationalPolynomial& d);

/// Human-readable form, highest degree first: "x^2 + x - 1".
std::string to_string(const RationalPolynomial& p, const std::string& var = "x");
std::string to_string(const IntPolynomial& p, const std::string& var = "x");

}  // namespace grover
