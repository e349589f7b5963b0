#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "grover/cyclotomic.hpp"
#include "grover/linalg.hpp"
#include "grover/number_field.hpp"
#include "grover/polynomial.hpp"
#include "grover/rational.hpp"
#include "grover/surd.hpp"
#include "support/oracles.hpp"

using namespace grover;

namespace {

double eval(const RationalPolynomial& p, double x) {
  double acc = 0;
  for (int i = p.degree(); i >= 0; --i) acc = acc * x + p.coeff(static_cast<std::size_t>(i)).get_d();
  return acc;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return b == 0 ? a : gcd_u(b, a % b); }

}  // namespace

TEST(Rational, MakeRationalCanonicalizes) {
  EXPECT_EQ(make_rational(2, 2), Rational(1));
  EXPECT_EQ(make_rational(-6, 4), Rational(-3, 2));
  EXPECT_EQ(make_rational(3, -9), Rational(-1, 3));
}

TEST(Rational, NumberTheoryAgainstTrialDivision) {
  for (std::uint64_t n = 1; n <= 300; ++n) {
    std::uint64_t phi = 0;
    for (std::uint64_t k = 1; k <= n; ++k) phi += gcd_u(k, n) == 1;
    EXPECT_EQ(euler_phi(n), phi) << n;

    bool prime = n >= 2;
    for (std::uint64_t d = 2; d * d <= n && prime; ++d) prime = n % d != 0;
    EXPECT_EQ(is_prime(n), prime) << n;

    std::uint64_t prod = 1;
    for (const auto& f : factorize(n)) prod *= ipow(f.prime, f.exponent);
    EXPECT_EQ(prod, n);
  }
  EXPECT_EQ(as_prime_power(49).prime, 7U);
  EXPECT_EQ(as_prime_power(49).exponent, 2U);
  EXPECT_EQ(as_prime_power(12).exponent, 0U);
  std::uint64_t s = 0;
  EXPECT_EQ(squarefree_part(72, s), 2U);
  EXPECT_EQ(s, 6U);
}

TEST(Rational, SqrtOfSquares) {
  Rational r;
  EXPECT_TRUE(rational_sqrt(Rational(9, 16), r));
  EXPECT_EQ(r, Rational(3, 4));
  EXPECT_FALSE(rational_sqrt(Rational(2), r));
}

TEST(Polynomial, DivmodReconstructs) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> a(6), b(3);
    for (auto& c : a) c = coef(rng);
    for (auto& c : b) c = coef(rng);
    b.back() = 1 + std::abs(coef(rng));
    RationalPolynomial pa(a), pb(b);
    auto [q, r] = pa.divmod(pb);
    EXPECT_EQ(q * pb + r, pa);
    EXPECT_LT(r.degree(), pb.degree());
  }
}

TEST(Polynomial, DivideOutCountsMultiplicity) {
  RationalPolynomial lin({Rational(-1), Rational(1)});
  RationalPolynomial p = lin * lin * lin * RationalPolynomial({Rational(1), Rational(0), Rational(1)});
  EXPECT_EQ(divide_out(p, lin), 3);
  EXPECT_EQ(p, RationalPolynomial({Rational(1), Rational(0), Rational(1)}));
}

TEST(Polynomial, Rendering) {
  EXPECT_EQ(to_string(IntPolynomial({Integer(-1), Integer(1), Integer(1)})), "x^2 + x - 1");
}

TEST(Surd, FieldOperations) {
  const Surd s5 = Surd::sqrt(5);
  EXPECT_EQ(s5 * s5, Surd(5));
  EXPECT_EQ(Surd::sqrt(12), Surd(2) * Surd::sqrt(3));
  EXPECT_EQ(Surd::sqrt(9), Surd(3));
  const Surd golden = (Surd(1) + s5) / Surd(2);
  EXPECT_EQ(golden * golden, golden + Surd(1));
  const Surd mixed = Surd(1) / ((s5 + Surd(1)) * (Surd::sqrt(13) - Surd(1)));
  EXPECT_NEAR(static_cast<double>(mixed.approx()), 1.0 / ((std::sqrt(5.0) + 1) * (std::sqrt(13.0) - 1)), 1e-12);
  EXPECT_EQ(mixed * mixed.inverse(), Surd(1));
  EXPECT_THROW(Surd(0).inverse(), std::exception);
}

TEST(Surd, OrderAndFormatting) {
  EXPECT_TRUE(value_less(Surd::quadratic(Rational(1, 2), Rational(-1, 2), 5), Surd(0)));
  EXPECT_TRUE(value_less(Surd::sqrt(2), Surd::sqrt(3)));
  EXPECT_EQ(Surd(Rational(3, 4)).to_string(), "3/4");
  EXPECT_EQ(Surd::quadratic(Rational(1, 4), Rational(1, 4), 5).to_string(), "(1+sqrt(5))/4");
  EXPECT_TRUE(Surd::quadratic(0, 1, 7).is_quadratic());
  EXPECT_EQ(Surd::quadratic(0, 1, 7).radicand(), 7U);
}

TEST(Cyclotomic, CosMinimalPolynomialsVanishAtCos) {
  const double pi = std::acos(-1.0);
  for (std::uint64_t n = 1; n <= 40; ++n) {
    const auto mu = minimal_poly_cos(n);
    EXPECT_EQ(static_cast<std::uint64_t>(mu.degree()), n <= 2 ? 1 : euler_phi(n) / 2) << n;
    EXPECT_EQ(mu.leading(), Rational(1));
    // Every primitive cos(2 pi j / n) is a root.
    for (std::uint64_t j = 1; j <= n; ++j) {
      if (gcd_u(j, n) != 1) continue;
      EXPECT_NEAR(eval(mu, std::cos(2 * pi * static_cast<double>(j) / static_cast<double>(n))), 0.0, 1e-9) << n;
    }
  }
}

TEST(Cyclotomic, KnownSmallCases) {
  EXPECT_EQ(cyclotomic_polynomial(6), IntPolynomial({Integer(1), Integer(-1), Integer(1)}));
  EXPECT_EQ(minimal_poly_2cos(5), IntPolynomial({Integer(-1), Integer(1), Integer(1)}));
  const auto orders = cos_orders_up_to_degree(2);
  EXPECT_EQ(orders, (std::vector<std::uint64_t>{1, 2, 3, 4, 5, 6, 8, 10, 12}));
}

TEST(Linalg, CharacteristicPolynomialMatchesFaddeevLeverrier) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 15; ++trial) {
    const auto g = oracle::random_connected_regular(rng, 9);
    EXPECT_EQ(characteristic_polynomial(g.adjacency()), oracle::faddeev_leverrier(g));
  }
}

TEST(Linalg, BareissDeterminant) {
  IntegerMatrix m(3, 3);
  const int v[3][3] = {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = v[i][j];
  EXPECT_EQ(bareiss_determinant(m), Integer(4));
}

TEST(Linalg, NullspaceAndSolve) {
  RationalMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2U);
  for (const auto& v : ns) EXPECT_EQ(m.apply(v), std::vector<Rational>(2, Rational(0)));

  RationalMatrix a(2, 2);
  a(0, 0) = 2; a(0, 1) = 1; a(1, 0) = 1; a(1, 1) = 3;
  const auto x = solve(a, {Rational(3), Rational(5)});
  EXPECT_EQ(a.apply(x), (std::vector<Rational>{3, 5}));
}

TEST(NumberField, InverseInGoldenField) {
  auto f = std::make_shared<const RationalPolynomial>(RationalPolynomial({Rational(-1), Rational(-1), Rational(1)}));
  const auto phi = FieldElement::generator(f);
  EXPECT_EQ(phi * phi, phi + FieldElement(1));
  EXPECT_EQ(phi * phi.inverse(), FieldElement(1));
}
