#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "grover/graph.hpp"
#include "grover/matrix.hpp"
#include "grover/polynomial.hpp"
#include "grover/surd.hpp"

namespace grover::walk {

using graph::Graph;
using graph::Vertex;

/// U = S(2 N*N - I) over the symmetric arcs of G (rows and columns in
/// Graph::arcs() order). (N*N)_{ab} = [t(a) = t(b)] / deg t(a), so every
/// entry is rational. Rejects loops and graphs without arcs.
RationalMatrix time_evolution(const Graph& g);

/// S: a <-> a^{-1}.
IntegerMatrix shift(const Graph& g);
/// K with K_{ua} = [t(a) = u]; the boundary matrix is N = D^{-1/2} K.
IntegerMatrix head_incidence(const Graph& g);

/// N N* = I (i.e. K K^T = D) and S^2 = I.
bool boundary_structure_holds(const Graph& g);

/// P = A / k for a k-regular graph; throws InvalidInput otherwise.
RationalMatrix discriminant(const Graph& g);

/// T_tau(P) e_u by the three-term recurrence.
std::vector<Rational> chebyshev_apply(const RationalMatrix& p, Vertex u, std::uint64_t tau);
/// T_tau(M) as a matrix.
RationalMatrix chebyshev_matrix(const RationalMatrix& m, std::uint64_t tau);
/// T_tau(x) at an exact scalar.
Surd chebyshev_value(const Surd& x, std::uint64_t tau);

/// N U^tau N* = T_tau(P) for every tau in 0..tau_max, checked in the rational
/// form K U^tau K^T = D T_tau(D^{-1} A), which is the identity conjugated by
/// D^{1/2}.
bool chebyshev_identity_holds(const Graph& g, std::uint64_t tau_max);

inline constexpr std::uint64_t kMaxBruteforceTau = 100'000;

/// Least tau <= tau_max with U^tau = I, by exact integer-scaled powers of U
/// (W = L U with L = lcm of degrees is integral). Each column is followed to
/// its first return; the period is the lcm of the return times. For Cayley
/// graphs only the arcs leaving vertex 0 are followed, since translations
/// commute with U.
std::optional<std::uint64_t> is_periodic_bruteforce(const Graph& g, std::uint64_t tau_max);

/// One irreducible factor of the characteristic polynomial of P.
struct SpectralFactor {
  /// Monic minimal polynomial over Q in the variable mu (eigenvalue of P).
  RationalPolynomial minimal_polynomial;
  /// Algebraic multiplicity of each root.
  std::uint64_t multiplicity = 0;
  /// Roots as exact scalars when the degree is at most 2, descending.
  std::vector<Surd> roots;
  /// n such that the roots are the primitive values cos(2 pi j / n).
  std::optional<std::uint64_t> cos_order;
  /// Whether the roots lie in the allowed periodicity sets.
  bool allowed = false;
  int degree() const { return minimal_polynomial.degree(); }
};

struct SpectralReport {
  std::size_t vertex_count = 0;
  std::size_t degree = 0;  // k
  IntPolynomial adjacency_charpoly;
  std::vector<SpectralFactor> rational;
  std::vector<SpectralFactor> quadratic;
  /// Irreducible factors of degree >= 3 that are cos(2 pi / n) pieces.
  std::vector<SpectralFactor> higher;
  /// Product of whatever is left (degree >= 3, roots outside the allowed set);
  /// constant 1 when nothing is left.
  RationalPolynomial residual;
  bool periodic = false;
  /// lcm of 2 and every cos order when periodic; U^bound = I.
  std::optional<std::uint64_t> period_bound;

  std::vector<const SpectralFactor*> factors() const;
  /// Multiplicity of mu = 1 (number of components for regular graphs).
  std::uint64_t multiplicity_of_one() const;
};

/// Exact spectrum of P for a regular graph together with the periodicity
/// verdict. char(A) comes from fraction-free elimination; integer roots are
/// divided out, then the k-scaled minimal polynomial of every cos(2 pi / n)
/// whose degree phi(n)/2 fits the remaining degree, then quadratic factors
/// proposed from numeric eigenvalues and confirmed by exact division. The
/// verdict only depends on the exact steps.
SpectralReport classify_spectrum(const Graph& g);

/// Least tau with U^tau = I when the classifier says periodic, confirmed by
/// exact powers up to the classifier's bound.
std::optional<std::uint64_t> period(const Graph& g);
std::optional<std::uint64_t> period(const Graph& g, const SpectralReport& spectrum);

struct PstEntry {
  Vertex u;
  Vertex v;
  std::uint64_t tau;
  int gamma;  // +1 or -1
  friend bool operator==(const PstEntry&, const PstEntry&) = default;
  friend auto operator<=>(const PstEntry&, const PstEntry&) = default;
};

struct PstReport {
  std::vector<PstEntry> pairs;  // sorted (u, v, tau)
  std::uint64_t search_bound = 0;
  bool periodic = false;
  std::optional<std::uint64_t> period;
  bool vertex_transitive = false;
  bool pruned_by_periodicity = false;
  bool empty() const { return pairs.empty(); }
};

/// Every (u, v, tau, gamma) with T_tau(P) e_u = gamma e_v, u != v.
/// Periodic graphs are searched for tau < period; vertex-transitive
/// non-periodic graphs have no PST and return at once; any other graph needs
/// tau_max, otherwise InvalidInput.
PstReport find_pst(const Graph& g, std::optional<std::uint64_t> tau_max = std::nullopt);
PstReport find_pst(const Graph& g, const SpectralReport& spectrum, std::optional<std::uint64_t> tau_max);

/// Theta_P(u) for a graph whose P-eigenvalues are all rational or quadratic,
/// descending. Throws UnsupportedDegree otherwise.
std::vector<Surd> eigen_support(const Graph& g, Vertex u);
std::vector<Surd> eigen_support(const Graph& g, const SpectralReport& spectrum, Vertex u);

/// E_r e_u = +-E_r e_v for every eigenvalue, over the number field of each
/// irreducible factor. The leftover factor (roots of degree >= 3 outside the
/// allowed set) must project both vertices to zero.
bool projector_condition(const Graph& g, const SpectralReport& spectrum, Vertex u, Vertex v);

/// T_tau(mu) = +-1 for every mu in Theta_P(u), any factor degree.
bool support_condition(const Graph& g, const SpectralReport& spectrum, Vertex u, std::uint64_t tau);

struct WalkReport {
  SpectralReport spectrum;
  std::optional<std::uint64_t> period;
  PstReport pst;
};

WalkReport analyze(const Graph& g, std::optional<std::uint64_t> tau_max = std::nullopt);

/// Rows of exact rational strings.
nlohmann::ordered_json matrix_to_json(const RationalMatrix& m);
nlohmann::ordered_json to_json(const SpectralReport& s);
nlohmann::ordered_json to_json(const PstReport& p, const Graph& g);
nlohmann::ordered_json to_json(const WalkReport& w, const Graph& g);

}  // namespace grover::walk
