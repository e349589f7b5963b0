#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "grover/errors.hpp"
#include "grover/walk.hpp"
#include "support/oracles.hpp"

using namespace grover;
using namespace grover::walk;
using graph::cycle;
using graph::Graph;

namespace {

std::vector<std::string> eigenvalue_strings(const SpectralReport& s) {
  std::vector<std::string> out;
  const auto j = to_json(s);
  for (const auto& e : j["eigenvalues"])
    out.push_back(e["value"].get<std::string>() + "x" + std::to_string(e["multiplicity"].get<int>()));
  return out;
}

Graph unitary(const char* spec) { return graph::unitary_cayley(ring::make_ring(spec)); }
Graph quadratic(const char* spec) { return graph::quadratic_unitary_cayley(ring::make_ring(spec)); }

}  // namespace

TEST(Walk, TimeEvolutionMatchesDefinition) {
  std::mt19937_64 rng(1);
  for (int trial = 0; trial < 10; ++trial) {
    const auto g = oracle::random_connected_regular(rng, 8);
    const auto u = time_evolution(g);
    const auto ref = oracle::grover_walk(g);
    ASSERT_EQ(u.rows(), ref.u.size());
    for (std::size_t i = 0; i < u.rows(); ++i)
      for (std::size_t j = 0; j < u.cols(); ++j) EXPECT_DOUBLE_EQ(u(i, j).get_d(), ref.u[i][j]);
  }
}

TEST(Walk, TimeEvolutionIsOrthogonal) {
  for (const auto& g : {cycle(5), unitary("Z12"), quadratic("Z13"), graph::complete(4)}) {
    const auto u = time_evolution(g);
    EXPECT_EQ(u.transpose() * u, RationalMatrix::identity(u.rows()));
  }
}

TEST(Walk, BoundaryStructure) {
  EXPECT_TRUE(boundary_structure_holds(unitary("Z12")));
  const auto s = shift(cycle(4));
  EXPECT_EQ(s * s, IntegerMatrix::identity(8));
}

TEST(Walk, DiscriminantNeedsRegularity) {
  EXPECT_EQ(discriminant(cycle(4))(0, 1), Rational(1, 2));
  const Graph path(3, {{0, 1}, {1, 2}});
  EXPECT_THROW(discriminant(path), InvalidInput);
  EXPECT_THROW(time_evolution(Graph(2, {{0, 0}}, true)), InvalidInput);
}

TEST(Walk, ChebyshevValueMatchesCosine) {
  for (const Surd& x : {Surd(Rational(1, 2)), Surd(Rational(-1, 4)), Surd::quadratic(Rational(-1, 4), Rational(1, 4), 5),
                        Surd::quadratic(0, Rational(1, 2), 2)}) {
    const double xd = static_cast<double>(x.approx());
    for (std::uint64_t tau = 0; tau <= 15; ++tau)
      EXPECT_NEAR(static_cast<double>(chebyshev_value(x, tau).approx()), std::cos(tau * std::acos(xd)), 1e-9);
  }
}

TEST(Walk, ChebyshevIdentity) {
  EXPECT_TRUE(chebyshev_identity_holds(cycle(4), 8));
  EXPECT_TRUE(chebyshev_identity_holds(unitary("Z6"), 6));
  EXPECT_TRUE(chebyshev_identity_holds(quadratic("Z13"), 4));
}

TEST(Walk, CycleFourAndFive) {
  const auto c4 = analyze(cycle(4));
  EXPECT_EQ(c4.period, 4U);
  ASSERT_FALSE(c4.pst.empty());
  EXPECT_EQ(c4.pst.pairs.front(), (PstEntry{0, 2, 2, 1}));

  const auto c5 = analyze(cycle(5));
  EXPECT_EQ(c5.period, 5U);
  EXPECT_TRUE(c5.pst.empty());
}

TEST(Walk, UnitaryZ12Spectrum) {
  const auto g = unitary("Z12");
  const auto s = classify_spectrum(g);
  EXPECT_EQ(eigenvalue_strings(s), (std::vector<std::string>{"1x1", "1/2x2", "0x6", "-1/2x2", "-1x1"}));
  EXPECT_TRUE(s.periodic);
  EXPECT_EQ(period(g, s), 12U);
  const auto pst = find_pst(g, s, std::nullopt);
  ASSERT_FALSE(pst.empty());
  for (const auto& e : pst.pairs) EXPECT_EQ(e.tau, 6U);
}

TEST(Walk, QuadraticExamples) {
  EXPECT_FALSE(classify_spectrum(unitary("Z5")).periodic);
  EXPECT_EQ(period(quadratic("Z5")), 5U);

  const auto z13 = classify_spectrum(quadratic("Z13"));
  EXPECT_FALSE(z13.periodic);
  EXPECT_EQ(eigenvalue_strings(z13),
            (std::vector<std::string>{"1x1", "(-1+sqrt(13))/12x6", "(-1-sqrt(13))/12x6"}));

  const auto z10 = analyze(quadratic("Z10"));
  EXPECT_EQ(z10.period, 10U);
  ASSERT_FALSE(z10.pst.empty());
  EXPECT_EQ(z10.pst.pairs.front().tau, 5U);
}

TEST(Walk, HigherDegreeCosFactor) {
  const auto s = classify_spectrum(cycle(7));
  EXPECT_TRUE(s.periodic);
  ASSERT_EQ(s.higher.size(), 1U);
  EXPECT_EQ(s.higher.front().cos_order, 7U);
  EXPECT_EQ(period(cycle(7)), 7U);
}

TEST(Walk, NonTransitiveGraphNeedsBound) {
  // The 3-cube from a plain edge list carries no translation structure, and
  // its eigenvalue 1/3 makes it non-periodic, so an unbounded search is refused.
  const Graph cube(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
  const auto s = classify_spectrum(cube);
  ASSERT_FALSE(s.periodic);
  EXPECT_THROW(find_pst(cube, s, std::nullopt), InvalidInput);
  EXPECT_NO_THROW(find_pst(cube, s, 20));
}

TEST(Walk, EigenSupportOfC4) {
  EXPECT_EQ(eigen_support(cycle(4), 0), (std::vector<Surd>{Surd(1), Surd(0), Surd(-1)}));
  EXPECT_THROW(eigen_support(cycle(7), 0), UnsupportedDegree);
}

TEST(Walk, PstConditionsOnC4) {
  const auto g = cycle(4);
  const auto s = classify_spectrum(g);
  EXPECT_TRUE(projector_condition(g, s, 0, 2));
  EXPECT_FALSE(projector_condition(g, s, 0, 1));
  EXPECT_TRUE(support_condition(g, s, 0, 2));
  EXPECT_FALSE(support_condition(g, s, 0, 1));
}

TEST(Walk, JsonIsDeterministic) {
  const auto g = unitary("Z12");
  EXPECT_EQ(to_json(analyze(g), g).dump(), to_json(analyze(g), g).dump());
}

// Random regular graphs: classifier, exact powers and a floating-point
// reference agree; PST matches the numeric Chebyshev oracle.
TEST(WalkProperties, AgreesWithNumericOracles) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = oracle::random_connected_regular(rng, 10);
    SCOPED_TRACE(graph::to_json(g).dump());
    const auto s = classify_spectrum(g);
    const auto exact = is_periodic_bruteforce(g, 60);
    const auto numeric = oracle::numeric_period(g, 60);
    EXPECT_EQ(exact, numeric);
    const auto p = period(g, s);
    if (p && *p <= 60) {
      EXPECT_EQ(exact, p);
    } else {
      EXPECT_FALSE(exact);
    }

    // Periodic graphs are searched below the period, the rest up to tau_max.
    const auto pst = find_pst(g, s, 30);
    if (p && *p > 240) continue;
    auto expected = oracle::numeric_pst(g, p ? *p - 1 : 30);
    std::vector<PstEntry> ref;
    for (const auto& e : expected) ref.push_back({e.u, e.v, e.tau, e.gamma});
    std::sort(ref.begin(), ref.end());
    EXPECT_EQ(pst.pairs, ref);
  }
}

// Automorphisms map PST pairs to PST pairs with the same time and sign.
TEST(WalkProperties, PstTransportsUnderAutomorphisms) {
  for (const char* spec : {"Z12", "Z3 x G(2)", "Z6"}) {
    const auto g = unitary(spec);
    const auto pst = find_pst(g);
    const std::set<PstEntry> all(pst.pairs.begin(), pst.pairs.end());
    const graph::AutomorphismGroup aut(g);
    for (const auto& s : aut.strong_generators())
      for (const auto& e : pst.pairs) EXPECT_EQ(all.count({s(e.u), s(e.v), e.tau, e.gamma}), 1U) << spec;
  }
}
