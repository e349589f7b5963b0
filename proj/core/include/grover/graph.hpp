#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "grover/matrix.hpp"
#include "grover/ring.hpp"

namespace grover::graph {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

struct Arc {
  Vertex tail;  // o(a)
  Vertex head;  // t(a)
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// Bijection on vertex indices, stored as the image list sigma(0..n-1).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<Vertex> image);
  static Permutation identity(std::size_t n);

  std::size_t size() const { return image_.size(); }
  Vertex operator()(Vertex v) const { return image_[v]; }
  const std::vector<Vertex>& image() const { return image_; }

  /// (this * other)(v) = this(other(v)).
  Permutation compose(const Permutation& other) const;
  Permutation inverse() const;
  bool is_identity() const;
  /// (M)_{uv} = 1 iff u = sigma(v).
  IntegerMatrix matrix() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend bool operator<(const Permutation& a, const Permutation& b) { return a.image_ < b.image_; }

 private:
  std::vector<Vertex> image_;
};

/// Finite undirected graph without multi-edges. Loops are only accepted when
/// loops_allowed is set; a loop contributes 1 to the adjacency diagonal and to
/// the vertex degree.
class Graph {
 public:
  Graph() = default;
  Graph(std::size_t n, const std::vector<Edge>& edges, bool loops_allowed = false,
        std::vector<std::string> labels = {});

  std::size_t vertex_count() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  /// Edges as (u, v) with u <= v, sorted.
  const std::vector<Edge>& edges() const { return edges_; }
  bool loops_allowed() const { return loops_allowed_; }
  bool has_loops() const { return loop_count_ > 0; }

  bool adjacent(Vertex u, Vertex v) const { return adj_[u * n_ + v] != 0; }
  /// Sorted neighbours; includes u itself when u carries a loop.
  const std::vector<Vertex>& neighbors(Vertex u) const { return nbrs_[u]; }
  std::size_t degree(Vertex u) const { return nbrs_[u].size(); }
  bool is_regular() const;
  /// Common degree of a regular graph.
  std::optional<std::size_t> regular_degree() const;
  bool is_connected() const;
  /// Vertex sets of the connected components, each sorted, ordered by least vertex.
  std::vector<std::vector<Vertex>> components() const;

  /// Symmetric arcs (u, v) for every non-loop edge, sorted by (tail, head).
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::size_t arc_index(Vertex tail, Vertex head) const;

  IntegerMatrix adjacency() const;

  /// Translation automorphisms of a Cayley graph: translations()[a] maps
  /// vertex 0 to a. Empty when no such structure is known.
  const std::vector<std::vector<Vertex>>& translations() const { return translations_; }
  bool vertex_transitive_by_construction() const { return !translations_.empty(); }
  void set_translations(std::vector<std::vector<Vertex>> t);

  /// Subgraph induced on the given vertex set (kept in the given order).
  /// Translations are carried over when the set is a coset of the
  /// translation group, which holds for components of Cayley graphs.
  Graph induced(const std::vector<Vertex>& vertices) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  bool loops_allowed_ = false;
  std::size_t loop_count_ = 0;
  std::vector<std::string> labels_;
  std::vector<Edge> edges_;
  std::vector<unsigned char> adj_;
  std::vector<std::vector<Vertex>> nbrs_;
  std::vector<Arc> arcs_;
  std::vector<std::size_t> arc_offset_;  // first arc index per tail
  std::vector<std::vector<Vertex>> translations_;
};

/// Cayley graph Cay(R, C): u ~ v iff u - v in C. Vertices follow ring index
/// order and carry the ring's element labels.
Graph cayley(const ring::ProductRing& r, const ring::ConnectionSet& c);
Graph unitary_cayley(const ring::ProductRing& r);
Graph quadratic_unitary_cayley(const ring::ProductRing& r);

/// Vertices (g, h) at index g * |H| + h.
Graph tensor_product(const Graph& g, const Graph& h);

Graph complete(std::size_t n);
Graph cycle(std::size_t n);
/// K_n with a loop on every vertex; adjacency J_n.
Graph complete_pseudograph(std::size_t n);
IntegerMatrix all_ones(std::size_t m);

inline constexpr std::size_t kIsomorphismCap = 64;
inline constexpr std::size_t kAutomorphismEnumerationCap = 16;

/// A vertex bijection sigma: V(G) -> V(H) with u ~ v iff sigma(u) ~ sigma(v)
/// (loops included), i.e. M^T A(H) M = A(G); nullopt if none exists.
std::optional<Permutation> is_isomorphic(const Graph& g, const Graph& h, std::size_t cap = kIsomorphismCap);

bool is_automorphism(const Graph& g, const Permutation& p);

/// Aut(G) as a stabilizer chain. The base starts at the requested vertex, so
/// the generators above the first level generate its stabilizer.
class AutomorphismGroup {
 public:
  AutomorphismGroup(const Graph& g, Vertex first_base_point = 0, std::size_t cap = kIsomorphismCap);

  const std::vector<Vertex>& base() const { return base_; }
  /// Orbit of base()[i] under the pointwise stabilizer of base()[0..i).
  const std::vector<std::vector<Vertex>>& basic_orbits() const { return orbits_; }
  const std::vector<Permutation>& strong_generators() const { return generators_; }
  /// Generators of Aut(G)_{base()[0]}.
  std::vector<Permutation> stabilizer_generators() const;
  Integer order() const;
  /// Every element, sorted; refuses graphs above the enumeration cap.
  std::vector<Permutation> elements(std::size_t cap = kAutomorphismEnumerationCap) const;

 private:
  std::size_t n_ = 0;
  std::vector<Vertex> base_;
  std::vector<std::vector<Vertex>> orbits_;
  std::vector<Permutation> generators_;
  std::vector<std::size_t> level_of_generator_;
};

/// Full automorphism group (at most kAutomorphismEnumerationCap vertices).
std::vector<Permutation> automorphisms(const Graph& g, std::size_t cap = kAutomorphismEnumerationCap);
/// Aut(G)_u = Aut(G)_v, decided on stabilizer generators so it scales past
/// the enumeration cap.
bool same_stabilizer(const Graph& g, Vertex u, Vertex v, std::size_t cap = kIsomorphismCap);

std::string to_dot(const Graph& g, const std::string& name = "G", const std::vector<std::string>& comments = {});
/// {"n": int, "labels": [...], "edges": [[u, v], ...]}
nlohmann::ordered_json to_json(const Graph& g);

}  // namespace grover::graph
