#pragma once

#include <cstdint>
#include <map>
#include <string>

#include "grover/rational.hpp"

namespace grover {

/// Exact real number of the form sum_i c_i * sqrt(d_i) with rational c_i and
/// distinct squarefree positive d_i (d = 1 is the rational part). Closed
/// under field operations, so it holds every eigenvalue the Cayley-graph
/// spectrum formulas produce, including products like
/// 1 / ((sqrt(5)+1)(sqrt(13)-1)).
///
/// The common single-radical case a + b*sqrt(d) is the "quadratic" value
/// used throughout the spectral reports.
class Surd {
 public:
  Surd() = default;
  Surd(int v) : Surd(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Surd(const Rational& v);            // NOLINT(google-explicit-constructor)

  /// sqrt(n) for n >= 0, with square factors pulled out.
  static Surd sqrt(std::uint64_t n);
  /// a + b * sqrt(d)
  static Surd quadratic(const Rational& a, const Rational& b, std::uint64_t d);

  bool is_zero() const { return terms_.empty(); }
  bool is_rational() const;
  /// At most one irrational radicand.
  bool is_quadratic() const;
  Rational rational_part() const;
  /// Radicand of a quadratic value (1 for rationals).
  std::uint64_t radicand() const;
  /// Coefficient of sqrt(radicand()) for a quadratic value.
  Rational irrational_coefficient() const;
  const std::map<std::uint64_t, Rational>& terms() const { return terms_; }

  long double approx() const;

  Surd operator-() const;
  Surd& operator+=(const Surd& o);
  Surd& operator-=(const Surd& o);
  Surd& operator*=(const Surd& o);
  Surd& operator/=(const Surd& o) { return *this *= o.inverse(); }
  friend Surd operator+(Surd a, const Surd& b) { return a += b; }
  friend Surd operator-(Surd a, const Surd& b) { return a -= b; }
  friend Surd operator*(Surd a, const Surd& b) { return a *= b; }
  friend Surd operator/(Surd a, const Surd& b) { return a /= b; }

  /// Multiplicative inverse via successive conjugation; throws on zero.
  Surd inverse() const;

  friend bool operator==(const Surd& a, const Surd& b) { return a.terms_ == b.terms_; }
  friend bool operator!=(const Surd& a, const Surd& b) { return !(a == b); }

  /// "3/4", "-1", "sqrt(3)/2", "(1+sqrt(5))/4".
  std::string to_string() const;

 private:
  void add_term(std::uint64_t radicand, const Rational& coeff);
  Surd conjugate_at(std::uint64_t prime) const;

  std::map<std::uint64_t, Rational> terms_;
};

using ExactScalar = Surd;

inline bool is_zero(const Surd& s) { return s.is_zero(); }

/// Strict order by real value; exact ties compare equal.
bool value_less(const Surd& a, const Surd& b);

}  // namespace grover
