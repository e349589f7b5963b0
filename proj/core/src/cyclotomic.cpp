#include "grover/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace grover {

const IntPolynomial& cyclotomic_polynomial(std::uint64_t n) {
  static std::mutex mu;
  static std::map<std::uint64_t, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
  }
  // x^n - 1 = prod_{d | n} Phi_d; every Phi_d is monic so integer division is exact.
  IntPolynomial num = IntPolynomial::monomial(Integer(1), n) - IntPolynomial::constant(Integer(1));
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    num = num.divmod(cyclotomic_polynomial(d)).first;
  }
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(n, std::move(num)).first->second;
}

IntPolynomial minimal_poly_2cos(std::uint64_t n) {
  if (n == 1) return IntPolynomial({Integer(-2), Integer(1)});
  if (n == 2) return IntPolynomial({Integer(2), Integer(1)});
  const IntPolynomial& phi = cyclotomic_polynomial(n);
  const std::size_t d = static_cast<std::size_t>(phi.degree()) / 2;
  // Phi_n(z) = z^d Psi_n(z + 1/z); z^j + z^-j = D_j(x) with
  // D_0 = 2, D_1 = x, D_{j+1} = x D_j - D_{j-1}.
  const IntPolynomial x({Integer(0), Integer(1)});
  IntPolynomial prev = IntPolynomial::constant(Integer(2));
  IntPolynomial cur = x;
  IntPolynomial psi = IntPolynomial::constant(phi.coeff(d));
  for (std::size_t j = 1; j <= d; ++j) {
    psi += phi.coeff(d + j) * cur;
    IntPolynomial next = x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return psi;
}

RationalPolynomial minimal_poly_cos(std::uint64_t n) {
  return to_rational(minimal_poly_2cos(n)).scale_argument(Rational(2)).monic();
}

std::vector<std::uint64_t> cos_orders_up_to_degree(unsigned max_degree) {
  std::vector<std::uint64_t> out;
  const std::uint64_t phi_cap = 2ULL * std::max(1U, max_degree);
  const std::uint64_t n_cap = 2ULL * phi_cap * phi_cap + 6;
  for (std::uint64_t n = 1; n <= n_cap; ++n) {
    std::uint64_t phi = euler_phi(n);
    unsigned deg = n <= 2 ? 1U : static_cast<unsigned>(phi / 2);
    if (deg <= max_degree) out.push_back(n);
  }
  return out;
}

}  // namespace grover
