#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace grover::ring {

enum class LocalKind {
  IntegersModPrimePower,  // Z_{p^k}
  TruncatedPolynomial,    // Z_p[x]/(x^k); k = 2 is the ring usually written G(p)
  GaloisField,            // F_{p^n} = Z_p[t]/(f), f monic irreducible of degree n
};

/// A finite commutative local ring from the catalog. Elements are encoded as
/// integers in [0, order): the residue itself for Z_{p^k}, and
/// sum_i c_i p^i over the coefficient vector for the polynomial kinds.
class LocalRingSpec {
 public:
  static LocalRingSpec integers_mod(std::uint64_t p, unsigned k);
  static LocalRingSpec truncated_polynomial(std::uint64_t p, unsigned k);
  /// With no modulus, the lexicographically smallest monic irreducible of
  /// degree n is searched; a supplied modulus (coefficients low to high,
  /// including the leading 1) is checked for irreducibility.
  static LocalRingSpec galois_field(std::uint64_t p, unsigned n,
                                    std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

  LocalKind kind() const { return kind_; }
  std::uint64_t prime() const { return p_; }
  unsigned exponent() const { return k_; }
  const std::vector<std::uint32_t>& modulus() const { return modulus_; }

  std::uint64_t order() const { return order_; }
  /// |M|: p^{k-1} for Z_{p^k} and Z_p[x]/(x^k), 1 for fields.
  std::uint64_t maximal_ideal_size() const;
  /// |R/M|.
  std::uint64_t residue_size() const { return order_ / maximal_ideal_size(); }
  std::uint64_t unit_count() const { return order_ - maximal_ideal_size(); }

  /// Canonical token: "Z4", "G(3)", "Zp[2,3]", "GF(9)".
  std::string name() const;

  std::uint32_t zero() const { return 0; }
  std::uint32_t one() const { return 1; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  bool is_unit(std::uint32_t a) const;
  /// "7"; "a+b" / "2a" for G(p); "t^2+1" for GF; "x^2+x+1" for Zp[p,k].
  std::string format(std::uint32_t a) const;

  /// Total order used for normalization: residue size desc, order desc,
  /// kind, modulus.
  friend bool normal_order_less(const LocalRingSpec& a, const LocalRingSpec& b);
  friend bool operator==(const LocalRingSpec& a, const LocalRingSpec& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  LocalRingSpec(LocalKind kind, std::uint64_t p, unsigned k);
  std::vector<std::uint32_t> digits(std::uint32_t a) const;
  std::uint32_t pack(const std::vector<std::uint32_t>& d) const;

  LocalKind kind_;
  std::uint64_t p_;
  unsigned k_;
  std::uint64_t order_;
  std::vector<std::uint32_t> modulus_;
};

bool normal_order_less(const LocalRingSpec& a, const LocalRingSpec& b);

/// Monic irreducibility over Z_p by trial division (coefficients low to high).
bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint64_t p);

struct RingElement {
  std::vector<std::uint32_t> components;
  std::uint64_t ring_tag = 0;

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.ring_tag == b.ring_tag && a.components == b.components;
  }
  friend bool operator!=(const RingElement& a, const RingElement& b) { return !(a == b); }
};

/// Finite commutative unital ring R_1 x ... x R_s, factors in normalized
/// order (residue sizes nonincreasing). Rings whose factors are all Z_{p^k}
/// with distinct primes are cyclic, printed as Z<n>, and their elements are
/// labelled and ordered by the integer they represent; every other ring
/// orders elements lexicographically on the component tuple.
class ProductRing {
 public:
  /// Normalizes the factor order; throws on an empty factor list.
  explicit ProductRing(std::vector<LocalRingSpec> factors);

  const std::vector<LocalRingSpec>& factors() const { return factors_; }
  std::size_t factor_count() const { return factors_.size(); }
  std::uint64_t order() const { return order_; }
  /// m = prod |M_i|.
  std::uint64_t maximal_ideal_product() const;
  std::uint64_t unit_count() const;
  bool is_cyclic() const { return cyclic_; }
  bool is_local() const { return factors_.size() == 1; }

  /// Canonical spec string, e.g. "Z12", "Z3 x G(2)", "GF(4) x Z3".
  const std::string& spec() const { return spec_; }
  std::uint64_t tag() const { return tag_; }

  RingElement element(std::size_t index) const;
  std::size_t index_of(const RingElement& x) const;
  std::vector<RingElement> elements() const;
  std::string format(const RingElement& x) const;

  RingElement zero() const;
  RingElement one() const;
  RingElement add(const RingElement& x, const RingElement& y) const;
  RingElement neg(const RingElement& x) const;
  RingElement sub(const RingElement& x, const RingElement& y) const { return add(x, neg(y)); }
  RingElement mul(const RingElement& x, const RingElement& y) const;
  bool is_unit(const RingElement& x) const;

  friend bool operator==(const ProductRing& a, const ProductRing& b) { return a.spec_ == b.spec_; }

 private:
  void check(const RingElement& x) const;
  std::size_t code_of(const std::vector<std::uint32_t>& comps) const;

  std::vector<LocalRingSpec> factors_;
  std::uint64_t order_ = 1;
  bool cyclic_ = false;
  std::string spec_;
  std::uint64_t tag_ = 0;
  std::vector<std::vector<std::uint32_t>> by_index_;
  std::vector<std::size_t> code_to_index_;
};

/// Largest ring (by order) that gets fully materialized.
inline constexpr std::uint64_t kMaxMaterializedOrder = 1U << 20;

/// Parse the ring-spec grammar
///   SPEC   := FACTOR ("x" FACTOR)*
///   FACTOR := "Z"<n> | "GF("<q>")" | "G("<p>")" | "Zp["<p>","<k>"]"
/// (whitespace-insensitive). Composite Z<n> is split by CRT.
ProductRing make_ring(const std::string& spec);

/// Factor sequence under the quadratic-unitary convention: the single factor
/// with residue size 3 mod 4 first, then the rest in normalized order.
/// Returns nullopt unless exactly one factor has residue 3 mod 4 and all
/// others 1 mod 4.
std::optional<std::vector<LocalRingSpec>> three_mod_four_first(const ProductRing& r);

enum class ConnectionKind { Units, QuadraticUnitsSymmetric };

struct ConnectionSet {
  std::vector<RingElement> elements;  // sorted by ring index
  ConnectionKind label = ConnectionKind::Units;
  /// |Q_R| for quadratic connection sets.
  std::size_t quadratic_size = 0;
};

/// R^x.
ConnectionSet units(const ProductRing& r);
/// T_R = Q_R u (-Q_R), Q_R = {u^2 : u in R^x}.
ConnectionSet quadratic_connection(const ProductRing& r);
/// Q_R alone, sorted by ring index.
std::vector<RingElement> unit_squares(const ProductRing& r);

/// Throws InvalidInput if 0 is in C or C != -C.
void validate_connection_set(const ProductRing& r, const ConnectionSet& c);

/// Every element is a sum of units iff at most one residue field is Z_2.
bool is_s_ring(const ProductRing& r);

/// Catalog rings of order <= max_order without factor-reordering
/// duplicates, sorted by (order, spec). Complete whenever every local factor
/// has order p or p^2.
std::vector<ProductRing> enumerate_rings(std::uint64_t max_order, std::uint64_t cap = 36);

}  // namespace grover::ring
