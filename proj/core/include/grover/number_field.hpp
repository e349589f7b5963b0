#pragma once

#include <memory>
#include <stdexcept>

#include "grover/polynomial.hpp"

namespace grover {

/// Element of Q[x]/(f) for a monic irreducible f, i.e. of the number field
/// Q(theta) with theta a root of f. An element with no modulus attached is a
/// plain rational constant and adopts the modulus of whatever it meets, so
/// generic code can write T(0) and T(1).
class FieldElement {
 public:
  using Modulus = std::shared_ptr<const RationalPolynomial>;

  FieldElement() = default;
  FieldElement(int v) : value_(RationalPolynomial::constant(Rational(v))) {}                 // NOLINT
  FieldElement(const Rational& v) : value_(RationalPolynomial::constant(v)) {}               // NOLINT
  FieldElement(RationalPolynomial v, Modulus f) : value_(std::move(v)), modulus_(std::move(f)) { reduce(); }

  /// The generator theta of Q[x]/(f).
  static FieldElement generator(Modulus f) {
    return FieldElement(RationalPolynomial({Rational(0), Rational(1)}), std::move(f));
  }

  const RationalPolynomial& value() const { return value_; }
  const Modulus& modulus() const { return modulus_; }
  bool is_zero() const { return value_.is_zero_poly(); }

  FieldElement operator-() const { return FieldElement(-value_, modulus_); }
  friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.value_ + b.value_, pick(a, b));
  }
  friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.value_ - b.value_, pick(a, b));
  }
  friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    return FieldElement(a.value_ * b.value_, pick(a, b));
  }
  friend FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  friend bool operator==(const FieldElement& a, const FieldElement& b) { return a.value_ == b.value_; }
  friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

  /// Extended Euclid modulo f; throws if f turns out to be reducible.
  FieldElement inverse() const;

 private:
  static Modulus pick(const FieldElement& a, const FieldElement& b) { return a.modulus_ ? a.modulus_ : b.modulus_; }
  void reduce() {
    if (modulus_ && value_.degree() >= modulus_->degree()) value_ = value_.divmod(*modulus_).second;
  }

  RationalPolynomial value_;
  Modulus modulus_;
};

inline bool is_zero(const FieldElement& x) { return x.is_zero(); }

}  // namespace grover
