#include "grover/rational.hpp"

namespace grover {

bool rational_sqrt(const Rational& x, Rational& root) {
  if (sgn(x) < 0) return false;
  if (!mpz_perfect_square_p(x.get_num_mpz_t()) || !mpz_perfect_square_p(x.get_den_mpz_t())) {
    return false;
  }
  Integer n = sqrt(x.get_num());
  Integer d = sqrt(x.get_den());
  root = make_rational(n, d);
  return true;
}

std::uint64_t squarefree_part(std::uint64_t n, std::uint64_t& square_root_of_square) {
  square_root_of_square = 1;
  std::uint64_t d = 1;
  for (const auto& [p, e] : factorize(n)) {
    square_root_of_square *= ipow(p, e / 2);
    if (e % 2 == 1) d *= p;
  }
  return d;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<PrimePower> factorize(std::uint64_t n) {
  std::vector<PrimePower> out;
  for (std::uint64_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.push_back({p, e});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

PrimePower as_prime_power(std::uint64_t n) {
  auto f = factorize(n);
  if (f.size() != 1) return {};
  return f.front();
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (const auto& pp : factorize(n)) phi = phi / pp.prime * (pp.prime - 1);
  return phi;
}

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp-- > 0) r *= base;
  return r;
}

}  // namespace grover
