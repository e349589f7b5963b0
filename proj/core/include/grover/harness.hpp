#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "grover/graph.hpp"
#include "grover/ring.hpp"
#include "grover/surd.hpp"
#include "grover/walk.hpp"

namespace grover::harness {

using ring::ProductRing;

enum class Family { Unitary, QuadraticUnitary };

std::string to_string(Family f);
/// "unitary" or "quadratic-unitary"; throws ParseError otherwise.
Family parse_family(const std::string& s);

/// G_R (connection set R^x) or the quadratic unitary graph (connection set T_R).
graph::Graph family_graph(const ProductRing& r, Family f);

/// Adjacency eigenvalues with multiplicities, equal values aggregated,
/// sorted by decreasing value.
struct PredictedSpectrum {
  std::vector<std::pair<Surd, std::uint64_t>> entries;

  void add(const Surd& value, std::uint64_t multiplicity);
  std::uint64_t total() const;
  nlohmann::ordered_json to_json() const;
};

/// lambda_C = (-1)^|C| |R^x| / prod_{j in C} (|R_j^x| / m_j) over all subsets C
/// of the factors, plus 0 for the remaining multiplicity.
PredictedSpectrum predicted_unitary_spectrum(const ProductRing& r);

enum class QuadraticRegime {
  AllOneModFour,   // every residue size = 1 mod 4
  OneThreeModFour, // exactly one residue size = 3 mod 4, the rest 1 mod 4
  Outside,
};
QuadraticRegime quadratic_regime(const ProductRing& r);
std::string to_string(QuadraticRegime r);

/// Spectrum of the quadratic unitary graph from the lambda_{B,C} formulas;
/// nullopt outside both regimes.
std::optional<PredictedSpectrum> predicted_quc_spectrum(const ProductRing& r);

/// Residue sizes: the first factor 2 or 3, every other factor 2.
bool predicted_periodic_unitary(const ProductRing& r);
/// R in {Z2, Z4, G(2), Z6, Z12, Z3 x G(2)}.
bool predicted_pst_unitary(const ProductRing& r);
/// The rings whose unitary Cayley graphs exhibit PST.
const std::vector<std::string>& unitary_pst_rings();
/// PST prediction for one component of a disconnected G_R: the component is
/// isomorphic to G_L for a listed ring L.
bool component_matches_pst_list(const graph::Graph& component);

/// All residues 1 mod 4: periodic iff s = 1 and residue Z5. One residue 3 mod
/// 4: periodic iff there are no other factors and the residue is Z3. Z10 and
/// Z6 are designated positive. nullopt for every other ring.
std::optional<bool> predicted_periodic_quc(const ProductRing& r);
/// PST only for Z10 and Z6; false inside the regimes; nullopt elsewhere.
std::optional<bool> predicted_pst_quc(const ProductRing& r);

/// Exact multiset equality: prod (x - lambda)^m over Q(sqrt d_1, ...) equals
/// the characteristic polynomial.
bool spectrum_matches(const PredictedSpectrum& p, const IntPolynomial& charpoly);

/// R/M for a local ring.
ProductRing residue_field(const ProductRing& local);

/// Isomorphism G_R -> G_{R/M} (x) K°_{|M|} for a local ring with odd residue
/// size; throws InvalidInput for other rings.
std::optional<graph::Permutation> zad_check(const ProductRing& r);

struct VerifyOptions {
  std::uint64_t bruteforce_tau_max = 120;
  /// Rings above this order skip the exact spectrum comparison.
  std::uint64_t spectrum_max_order = 128;
  unsigned threads = 0;  // 0: hardware concurrency
};

enum class Status { Pass, Fail, NotApplicable };
std::string to_string(Status s);

struct VerificationRecord {
  std::string ring;
  Family family = Family::Unitary;
  std::uint64_t order = 0;
  std::uint64_t maximal_ideal_product = 0;
  std::string regime;  // quadratic family only

  std::optional<bool> predicted_periodic;
  std::optional<bool> predicted_pst;
  bool pst_prediction_per_component = false;
  std::optional<PredictedSpectrum> predicted_spectrum;

  bool connected = false;
  std::size_t components = 0;
  std::size_t degree = 0;
  bool s_ring = false;
  bool periodic_spectral = false;
  std::optional<std::uint64_t> period_bruteforce;
  std::optional<std::uint64_t> period;
  walk::SpectralReport spectrum;  // of the component containing 0
  walk::PstReport pst;            // of the component containing 0
  graph::Graph component;         // the component containing 0
  std::optional<bool> spectrum_match;

  Status status = Status::Pass;
  std::vector<std::string> details;

  bool computed_pst() const { return !pst.empty(); }
};

VerificationRecord verify_ring(const ProductRing& r, Family f, const VerifyOptions& opts = {});

/// verify_ring over enumerate_rings(max_order), evaluated concurrently and
/// returned in enumeration order (order, then spec).
std::vector<VerificationRecord> sweep(std::uint64_t max_order, Family f, const VerifyOptions& opts = {},
                                      std::uint64_t cap = 36);

nlohmann::ordered_json to_json(const VerificationRecord& r);

}  // namespace grover::harness
