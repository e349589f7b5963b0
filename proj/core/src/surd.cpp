#include "grover/surd.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <vector>

namespace grover {

Surd::Surd(const Rational& v) { add_term(1, v); }

Surd Surd::sqrt(std::uint64_t n) {
  std::uint64_t outer = 1;
  std::uint64_t d = squarefree_part(n, outer);
  Surd s;
  if (n == 0) return s;
  s.add_term(d, Rational(static_cast<unsigned long>(outer)));
  return s;
}

Surd Surd::quadratic(const Rational& a, const Rational& b, std::uint64_t d) {
  Surd s(a);
  s += Surd(b) * Surd::sqrt(d);
  return s;
}

void Surd::add_term(std::uint64_t radicand, const Rational& coeff) {
  if (grover::is_zero(coeff)) return;
  auto [it, inserted] = terms_.try_emplace(radicand, coeff);
  if (!inserted) {
    it->second += coeff;
    if (grover::is_zero(it->second)) terms_.erase(it);
  }
}

bool Surd::is_rational() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 1); }

bool Surd::is_quadratic() const {
  std::size_t irrational = terms_.size() - (terms_.count(1) ? 1 : 0);
  return irrational <= 1;
}

Rational Surd::rational_part() const {
  auto it = terms_.find(1);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::uint64_t Surd::radicand() const {
  for (const auto& [d, c] : terms_)
    if (d != 1) return d;
  return 1;
}

Rational Surd::irrational_coefficient() const {
  for (const auto& [d, c] : terms_)
    if (d != 1) return c;
  return Rational(0);
}

long double Surd::approx() const {
  long double acc = 0;
  for (const auto& [d, c] : terms_) acc += static_cast<long double>(c.get_d()) * std::sqrt(static_cast<long double>(d));
  return acc;
}

Surd Surd::operator-() const {
  Surd s = *this;
  for (auto& [d, c] : s.terms_) c = -c;
  return s;
}

Surd& Surd::operator+=(const Surd& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, c);
  return *this;
}

Surd& Surd::operator-=(const Surd& o) {
  for (const auto& [d, c] : o.terms_) add_term(d, -c);
  return *this;
}

Surd& Surd::operator*=(const Surd& o) {
  Surd out;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      std::uint64_t g = std::gcd(a, b);
      Rational coeff = ca * cb * Rational(static_cast<unsigned long>(g));
      out.add_term((a / g) * (b / g), coeff);
    }
  }
  terms_ = std::move(out.terms_);
  return *this;
}

Surd Surd::conjugate_at(std::uint64_t prime) const {
  Surd s = *this;
  for (auto& [d, c] : s.terms_)
    if (d % prime == 0) c = -c;
  return s;
}

Surd Surd::inverse() const {
  if (terms_.empty()) throw std::domain_error("inverse of zero");
  if (is_rational()) return Surd(Rational(1) / terms_.begin()->second);
  std::uint64_t prime = 0;
  for (const auto& [d, c] : terms_) {
    if (d != 1) {
      prime = factorize(d).front().prime;
      break;
    }
  }
  // x * conj(x) is free of sqrt(prime); recurse on fewer radical primes.
  Surd conj = conjugate_at(prime);
  Surd norm = *this * conj;
  return conj * norm.inverse();
}

std::string Surd::to_string() const {
  if (terms_.empty()) return "0";
  if (is_rational()) return terms_.begin()->second.get_str();
  Integer den = 1;
  for (const auto& [d, c] : terms_) den = lcm(den, Integer(c.get_den()));
  std::vector<std::string> parts;
  std::ostringstream body;
  bool first = true;
  for (const auto& [d, c] : terms_) {
    Rational scaled = c * Rational(den);
    Integer n = scaled.get_num();
    bool neg = sgn(n) < 0;
    Integer mag = abs(n);
    if (!first || neg) body << (neg ? "-" : "+");
    first = false;
    if (d == 1) {
      body << mag.get_str();
    } else {
      if (mag != 1) body << mag.get_str() << "*";
      body << "sqrt(" << d << ")";
    }
  }
  std::string s = body.str();
  if (den == 1) return s;
  if (terms_.size() == 1) return s + "/" + den.get_str();
  return "(" + s + ")/" + den.get_str();
}

bool value_less(const Surd& a, const Surd& b) {
  if (a == b) return false;
  Surd diff = a - b;
  long double v = diff.approx();
  if (v != 0.0L) return v < 0.0L;
  // Below long double resolution; any total order keeps sorting stable.
  return a.to_string() < b.to_string();
}

}  // namespace grover
