#include <gtest/gtest.h>

#include <cmath>

#include "grover/errors.hpp"
#include "grover/harness.hpp"
#include "grover/linalg.hpp"
#include "support/oracles.hpp"

using namespace grover;
using namespace grover::harness;
using ring::make_ring;

namespace {

std::vector<double> expand(const PredictedSpectrum& p) {
  std::vector<double> out;
  for (const auto& [v, m] : p.entries)
    for (std::uint64_t i = 0; i < m; ++i) out.push_back(static_cast<double>(v.approx()));
  std::sort(out.begin(), out.end());
  return out;
}

// Connection set of a cyclic ring as residues mod n.
std::vector<std::uint64_t> residues(const ring::ProductRing& r, const std::vector<ring::RingElement>& xs) {
  std::vector<std::uint64_t> out;
  for (const auto& x : xs) out.push_back(r.index_of(x));
  return out;
}

void expect_close(const std::vector<double>& a, const std::vector<double>& b) {
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i], b[i], 1e-8) << i;
}

}  // namespace

TEST(Harness, FamilyNames) {
  EXPECT_EQ(parse_family("unitary"), Family::Unitary);
  EXPECT_EQ(parse_family("quadratic-unitary"), Family::QuadraticUnitary);
  EXPECT_THROW(parse_family("paley"), ParseError);
}

// Unitary Cayley graphs of Z_n are circulants; their spectrum is the list of
// Ramanujan sums, computed here as plain cosine sums.
TEST(Harness, UnitarySpectrumMatchesCirculantSums) {
  for (std::uint64_t n = 2; n <= 36; ++n) {
    const auto r = make_ring("Z" + std::to_string(n));
    SCOPED_TRACE(r.spec());
    expect_close(expand(predicted_unitary_spectrum(r)), oracle::circulant_spectrum(n, residues(r, ring::units(r).elements)));
  }
}

TEST(Harness, QuadraticSpectrumMatchesCirculantSums) {
  for (std::uint64_t n : {3, 5, 7, 9, 11, 13, 15, 17, 21, 25, 27, 29, 33, 35, 37, 39, 45, 49, 55, 63, 65, 85}) {
    const auto r = make_ring("Z" + std::to_string(n));
    SCOPED_TRACE(r.spec());
    const auto p = predicted_quc_spectrum(r);
    if (quadratic_regime(r) == QuadraticRegime::Outside) {
      EXPECT_FALSE(p);
      continue;
    }
    ASSERT_TRUE(p);
    expect_close(expand(*p), oracle::circulant_spectrum(n, residues(r, ring::quadratic_connection(r).elements)));
  }
}

TEST(Harness, RegimeDetection) {
  EXPECT_EQ(quadratic_regime(make_ring("Z65")), QuadraticRegime::AllOneModFour);
  EXPECT_EQ(quadratic_regime(make_ring("GF(9)")), QuadraticRegime::AllOneModFour);
  EXPECT_EQ(quadratic_regime(make_ring("Z35")), QuadraticRegime::OneThreeModFour);
  EXPECT_EQ(quadratic_regime(make_ring("G(3)")), QuadraticRegime::OneThreeModFour);
  EXPECT_EQ(quadratic_regime(make_ring("Z21")), QuadraticRegime::Outside);
  EXPECT_EQ(quadratic_regime(make_ring("Z10")), QuadraticRegime::Outside);
}

TEST(Harness, SpectrumMatchesIsExact) {
  const auto r = make_ring("Z5 x Z13");
  const auto g = family_graph(r, Family::QuadraticUnitary);
  const auto charpoly = characteristic_polynomial(g.adjacency());
  auto p = *predicted_quc_spectrum(r);
  EXPECT_TRUE(spectrum_matches(p, charpoly));
  // Same multiset size, one value nudged by a rational amount.
  p.entries.back().first += Surd(Rational(1, 1000));
  EXPECT_FALSE(spectrum_matches(p, charpoly));
}

TEST(Harness, UnitaryPredicates) {
  for (const char* s : {"Z2", "Z4", "G(2)", "Z6", "Z12", "Z3 x G(2)"}) EXPECT_TRUE(predicted_pst_unitary(make_ring(s))) << s;
  for (const char* s : {"Z3", "Z8", "Z2 x Z2", "Z24", "GF(4)"}) EXPECT_FALSE(predicted_pst_unitary(make_ring(s))) << s;
  for (const char* s : {"Z2", "Z3", "Z6", "Z12", "Z2 x Z2", "Z3 x Z2 x Z2", "Z8"})
    EXPECT_TRUE(predicted_periodic_unitary(make_ring(s))) << s;
  for (const char* s : {"Z5", "Z3 x Z3", "GF(4)", "Z15"}) EXPECT_FALSE(predicted_periodic_unitary(make_ring(s))) << s;
}

TEST(Harness, QuadraticPredicates) {
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z5")), true);
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z25")), true);
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z13")), false);
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z65")), false);
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z3")), true);
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z9")), true);
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z7")), false);
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z15")), false);
  EXPECT_EQ(predicted_periodic_quc(make_ring("Z10")), true);
  EXPECT_EQ(predicted_pst_quc(make_ring("Z6")), true);
  EXPECT_EQ(predicted_pst_quc(make_ring("Z5")), false);
  EXPECT_EQ(predicted_pst_quc(make_ring("GF(4) x Z3")), std::nullopt);
}

TEST(Harness, TensorDecompositionWitness) {
  for (const char* s : {"Z9", "Z25", "G(3)", "G(5)", "Z27"}) {
    const auto r = make_ring(s);
    const auto w = zad_check(r);
    ASSERT_TRUE(w) << s;
    const auto m = r.factors().front().maximal_ideal_size();
    const auto lhs = graph::quadratic_unitary_cayley(r);
    const auto rhs = graph::tensor_product(graph::quadratic_unitary_cayley(residue_field(r)), graph::complete_pseudograph(m));
    EXPECT_EQ(w->matrix().transpose() * rhs.adjacency() * w->matrix(), lhs.adjacency()) << s;
  }
  EXPECT_THROW(zad_check(make_ring("Z12")), InvalidInput);
  EXPECT_THROW(zad_check(make_ring("Z4")), InvalidInput);
}

TEST(Harness, VerifyRecords) {
  const auto z12 = verify_ring(make_ring("Z12"), Family::Unitary);
  EXPECT_EQ(z12.status, Status::Pass);
  EXPECT_EQ(z12.period, 12U);
  EXPECT_EQ(z12.spectrum_match, true);

  const auto z10 = verify_ring(make_ring("Z10"), Family::QuadraticUnitary);
  EXPECT_EQ(z10.status, Status::Pass);
  EXPECT_TRUE(z10.computed_pst());
  EXPECT_FALSE(z10.details.empty());

  const auto outside = verify_ring(make_ring("GF(4) x Z3"), Family::QuadraticUnitary);
  EXPECT_EQ(outside.status, Status::NotApplicable);

  const auto split = verify_ring(make_ring("Z2 x Z2"), Family::Unitary);
  EXPECT_FALSE(split.connected);
  EXPECT_TRUE(split.pst_prediction_per_component);
  EXPECT_EQ(split.status, Status::Pass);

  const auto j = to_json(z12);
  for (const char* key : {"ring", "family", "predicted", "computed", "status", "details"}) EXPECT_TRUE(j.contains(key)) << key;
  EXPECT_EQ(j["status"], "pass");
}

TEST(Harness, SweepIsDeterministicAndOrdered) {
  VerifyOptions one_thread;
  one_thread.threads = 1;
  VerifyOptions many;
  many.threads = 4;
  const auto a = sweep(12, Family::Unitary, one_thread);
  const auto b = sweep(12, Family::Unitary, many);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
  for (std::size_t i = 1; i < a.size(); ++i) EXPECT_LE(a[i - 1].order, a[i].order);
  EXPECT_THROW(sweep(40, Family::Unitary), CapExceeded);
}
