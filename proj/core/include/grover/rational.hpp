#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace grover {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Integer& x) { return sgn(x) == 0; }
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }

/// "3/4", "-2", "0".
inline std::string to_string(const Rational& x) { return x.get_str(); }
inline std::string to_string(const Integer& x) { return x.get_str(); }

inline bool is_integer(const Rational& x) { return x.get_den() == 1; }

/// Exact square root of a nonnegative rational, if it is a perfect square.
bool rational_sqrt(const Rational& x, Rational& root);

/// Largest-square-free decomposition n = s^2 * d with d squarefree.
/// Returns d and writes s.
std::uint64_t squarefree_part(std::uint64_t n, std::uint64_t& square_root_of_square);

bool is_prime(std::uint64_t n);

/// (p, k) with n = p^k, or k == 0 when n is not a prime power.
struct PrimePower {
  std::uint64_t prime = 0;
  unsigned exponent = 0;
};
PrimePower as_prime_power(std::uint64_t n);

/// Prime factorization in increasing prime order.
std::vector<PrimePower> factorize(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

std::uint64_t ipow(std::uint64_t base, unsigned exp);

}  // namespace grover
