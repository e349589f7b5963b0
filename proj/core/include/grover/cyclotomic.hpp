#pragma once

#include <cstdint>
#include <vector>

#include "grover/polynomial.hpp"

namespace grover {

/// n-th cyclotomic polynomial Phi_n (cached, thread-safe).
const IntPolynomial& cyclotomic_polynomial(std::uint64_t n);

/// Monic integer minimal polynomial Psi_n of 2cos(2*pi/n); degree phi(n)/2
/// for n >= 3, and x - 2, x + 2 for n = 1, 2.
IntPolynomial minimal_poly_2cos(std::uint64_t n);

/// Monic rational minimal polynomial of cos(2*pi/n), i.e. Psi_n(2x) / 2^d.
RationalPolynomial minimal_poly_cos(std::uint64_t n);

/// Every n whose cos(2*pi/n) has algebraic degree <= max_degree, ascending.
/// Complete because deg = phi(n)/2 and phi(n) >= sqrt(n/2).
std::vector<std::uint64_t> cos_orders_up_to_degree(unsigned max_degree);

}  // namespace grover
