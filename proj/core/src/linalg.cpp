#include "grover/linalg.hpp"

#include <stdexcept>

#include "grover/number_field.hpp"

namespace grover {

Integer bareiss_determinant(IntegerMatrix m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("determinant of non-square matrix");
  if (n == 0) return 1;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (sgn(m(k, k)) == 0) {
      std::size_t p = k + 1;
      while (p < n && sgn(m(p, k)) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  Integer det = m(n - 1, n - 1);
  return sign < 0 ? Integer(-det) : det;
}

IntPolynomial characteristic_polynomial(const IntegerMatrix& a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw std::invalid_argument("characteristic polynomial of non-square matrix");
  // Newton divided differences on nodes 0..n.
  std::vector<Rational> dd(n + 1);
  for (std::size_t t = 0; t <= n; ++t) {
    IntegerMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = -a(i, j);
    for (std::size_t i = 0; i < n; ++i) m(i, i) += static_cast<long>(t);
    dd[t] = Rational(bareiss_determinant(std::move(m)));
  }
  for (std::size_t level = 1; level <= n; ++level)
    for (std::size_t i = n; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / Rational(static_cast<long>(level));
  // Horner on the Newton basis: p = dd0 + (x-0)(dd1 + (x-1)(dd2 + ...)).
  RationalPolynomial p = RationalPolynomial::constant(dd[n]);
  for (std::size_t i = n; i-- > 0;) {
    p = p * RationalPolynomial::linear_root(Rational(static_cast<long>(i)));
    p += RationalPolynomial::constant(dd[i]);
  }
  return to_integer(p);
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero field element");
  if (!modulus_) return FieldElement(Rational(1) / value_.coeff(0));
  // Track s with s * value == r (mod f).
  RationalPolynomial r0 = *modulus_, r1 = value_;
  RationalPolynomial s0, s1 = RationalPolynomial::constant(Rational(1));
  while (!r1.is_zero_poly()) {
    auto [q, r] = r0.divmod(r1);
    RationalPolynomial s = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw std::domain_error("number field modulus is reducible");
  Rational inv = Rational(1) / r0.coeff(0);
  return FieldElement(inv * s0, modulus_);
}

}  // namespace grover
