#include "grover/polynomial.hpp"

#include <sstream>

namespace grover {

RationalPolynomial to_rational(const IntPolynomial& p) {
  std::vector<Rational> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) c.emplace_back(v);
  return RationalPolynomial(std::move(c));
}

IntPolynomial to_integer(const RationalPolynomial& p) {
  std::vector<Integer> c;
  c.reserve(p.coefficients().size());
  for (const auto& v : p.coefficients()) {
    if (!is_integer(v)) throw std::domain_error("polynomial has non-integral coefficient " + v.get_str());
    c.push_back(v.get_num());
  }
  return IntPolynomial(std::move(c));
}

RationalPolynomial gcd(RationalPolynomial a, RationalPolynomial b) {
  while (!b.is_zero_poly()) {
    auto r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

int divide_out(RationalPolynomial& p, const RationalPolynomial& d) {
  int count = 0;
  while (p.degree() >= d.degree()) {
    auto [q, r] = p.divmod(d);
    if (!r.is_zero_poly()) break;
    p = std::move(q);
    ++count;
  }
  return count;
}

namespace {

template <class T>
std::string render(const Polynomial<T>& p, const std::string& var) {
  if (p.is_zero_poly()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    T c = p.coeff(static_cast<std::size_t>(i));
    if (is_zero(c)) continue;
    bool neg = sgn(c) < 0;
    T mag = neg ? T(-c) : c;
    if (first) {
      if (neg) os << "-";
    } else {
      os << (neg ? " - " : " + ");
    }
    first = false;
    bool unit = (mag == 1);
    if (!unit || i == 0) os << mag.get_str();
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

}  // namespace

std::string to_string(const RationalPolynomial& p, const std::string& var) { return render(p, var); }
std::string to_string(const IntPolynomial& p, const std::string& var) { return render(p, var); }

}  // namespace grover
