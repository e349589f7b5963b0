#include "grover/graph.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include "grover/errors.hpp"

namespace grover::graph {

Permutation::Permutation(std::vector<Vertex> image) : image_(std::move(image)) {
  std::vector<bool> seen(image_.size(), false);
  for (auto v : image_) {
    if (v >= image_.size() || seen[v]) throw InvalidInput("not a permutation");
    seen[v] = true;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Vertex> id(n);
  std::iota(id.begin(), id.end(), Vertex{0});
  return Permutation(std::move(id));
}

Permutation Permutation::compose(const Permutation& other) const {
  std::vector<Vertex> out(other.size());
  for (Vertex v = 0; v < other.size(); ++v) out[v] = image_[other.image_[v]];
  return Permutation(std::move(out));
}

Permutation Permutation::inverse() const {
  std::vector<Vertex> out(image_.size());
  for (Vertex v = 0; v < image_.size(); ++v) out[image_[v]] = v;
  return Permutation(std::move(out));
}

bool Permutation::is_identity() const {
  for (Vertex v = 0; v < image_.size(); ++v)
    if (image_[v] != v) return false;
  return true;
}

IntegerMatrix Permutation::matrix() const {
  IntegerMatrix m(size(), size());
  for (Vertex v = 0; v < size(); ++v) m(image_[v], v) = 1;
  return m;
}

// ---------------------------------------------------------------------------

Graph::Graph(std::size_t n, const std::vector<Edge>& edges, bool loops_allowed, std::vector<std::string> labels)
    : n_(n), loops_allowed_(loops_allowed), labels_(std::move(labels)), adj_(n * n, 0), nbrs_(n) {
  if (labels_.empty()) {
    labels_.reserve(n);
    for (std::size_t i = 0; i < n; ++i) labels_.push_back(std::to_string(i));
  } else if (labels_.size() != n) {
    throw InvalidInput("label count does not match vertex count");
  }
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) throw InvalidInput("edge endpoint out of range");
    if (u > v) std::swap(u, v);
    if (u == v && !loops_allowed_) throw InvalidInput("loop on vertex " + std::to_string(u) + " in a simple graph");
    if (adj_[u * n + v]) throw InvalidInput("multi-edge " + std::to_string(u) + "-" + std::to_string(v));
    adj_[u * n + v] = adj_[v * n + u] = 1;
    edges_.emplace_back(u, v);
    if (u == v) ++loop_count_;
  }
  std::sort(edges_.begin(), edges_.end());
  arc_offset_.assign(n + 1, 0);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v)
      if (adj_[u * n + v]) nbrs_[u].push_back(v);
    arc_offset_[u] = arcs_.size();
    for (Vertex v : nbrs_[u])
      if (v != u) arcs_.push_back({u, v});
  }
  arc_offset_[n] = arcs_.size();
}

bool Graph::is_regular() const { return regular_degree().has_value(); }

std::optional<std::size_t> Graph::regular_degree() const {
  if (n_ == 0) return std::nullopt;
  const std::size_t k = degree(0);
  for (Vertex u = 1; u < n_; ++u)
    if (degree(u) != k) return std::nullopt;
  return k;
}

std::vector<std::vector<Vertex>> Graph::components() const {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(n_, false);
  for (Vertex s = 0; s < n_; ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    std::queue<Vertex> q;
    q.push(s);
    seen[s] = true;
    while (!q.empty()) {
      Vertex u = q.front();
      q.pop();
      comp.push_back(u);
      for (Vertex v : nbrs_[u])
        if (!seen[v]) {
          seen[v] = true;
          q.push(v);
        }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool Graph::is_connected() const { return n_ > 0 && components().size() == 1; }

std::size_t Graph::arc_index(Vertex tail, Vertex head) const {
  if (tail >= n_ || head >= n_ || tail == head || !adjacent(tail, head)) throw InvalidInput("no such arc");
  auto first = arcs_.begin() + static_cast<std::ptrdiff_t>(arc_offset_[tail]);
  auto last = arcs_.begin() + static_cast<std::ptrdiff_t>(arc_offset_[tail + 1]);
  auto it = std::lower_bound(first, last, head, [](const Arc& a, Vertex h) { return a.head < h; });
  return static_cast<std::size_t>(it - arcs_.begin());
}

IntegerMatrix Graph::adjacency() const {
  IntegerMatrix a(n_, n_);
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v : nbrs_[u]) a(u, v) = 1;
  a.row_labels = labels_;
  a.col_labels = labels_;
  return a;
}

void Graph::set_translations(std::vector<std::vector<Vertex>> t) {
  if (!t.empty()) {
    if (t.size() != n_) throw InvalidInput("translation table size mismatch");
    for (Vertex a = 0; a < n_; ++a)
      if (t[a].size() != n_ || t[a][0] != a) throw InvalidInput("translation table must map 0 to a");
  }
  translations_ = std::move(t);
}

Graph Graph::induced(const std::vector<Vertex>& vertices) const {
  std::vector<std::size_t> local(n_, n_);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = i;
  std::vector<Edge> es;
  for (auto [u, v] : edges_)
    if (local[u] < n_ && local[v] < n_) es.emplace_back(local[u], local[v]);
  std::vector<std::string> labs;
  for (auto v : vertices) labs.push_back(labels_[v]);
  Graph sub(vertices.size(), es, loops_allowed_, std::move(labs));
  if (translations_.empty() || vertices.empty()) return sub;
  std::vector<std::vector<Vertex>> t(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::vector<Vertex>* perm = nullptr;
    for (const auto& cand : translations_)
      if (cand[vertices[0]] == vertices[i]) {
        perm = &cand;
        break;
      }
    if (!perm) return sub;
    t[i].resize(vertices.size());
    for (std::size_t j = 0; j < vertices.size(); ++j) {
      std::size_t img = local[(*perm)[vertices[j]]];
      if (img >= n_) return sub;  // not a coset of the translation group
      t[i][j] = img;
    }
  }
  sub.set_translations(std::move(t));
  return sub;
}

// ---------------------------------------------------------------------------

Graph cayley(const ring::ProductRing& r, const ring::ConnectionSet& c) {
  ring::validate_connection_set(r, c);
  const std::size_t n = r.order();
  const auto elems = r.elements();
  std::vector<std::vector<Vertex>> trans(n, std::vector<Vertex>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t x = 0; x < n; ++x) trans[a][x] = r.index_of(r.add(elems[x], elems[a]));
  std::vector<Edge> edges;
  for (const auto& e : c.elements) {
    const auto ci = r.index_of(e);
    for (std::size_t x = 0; x < n; ++x) {
      Vertex y = trans[ci][x];
      if (x < y) edges.emplace_back(x, y);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& e : elems) labels.push_back(r.format(e));
  Graph g(n, edges, false, std::move(labels));
  g.set_translations(std::move(trans));
  return g;
}

Graph unitary_cayley(const ring::ProductRing& r) { return cayley(r, ring::units(r)); }

Graph quadratic_unitary_cayley(const ring::ProductRing& r) { return cayley(r, ring::quadratic_connection(r)); }

Graph tensor_product(const Graph& g, const Graph& h) {
  const std::size_t ng = g.vertex_count(), nh = h.vertex_count(), n = ng * nh;
  std::vector<Edge> edges;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x; y < n; ++y)
      if (g.adjacent(x / nh, y / nh) && h.adjacent(x % nh, y % nh)) edges.emplace_back(x, y);
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t a = 0; a < ng; ++a)
    for (std::size_t b = 0; b < nh; ++b) labels.push_back("(" + g.labels()[a] + "," + h.labels()[b] + ")");
  return Graph(n, edges, g.loops_allowed() || h.loops_allowed(), std::move(labels));
}

Graph complete(std::size_t n) {
  if (n < 1) throw InvalidInput("complete graph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph cycle(std::size_t n) {
  if (n < 3) throw InvalidInput("cycle needs n >= 3");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u) edges.emplace_back(u, (u + 1) % n);
  return Graph(n, edges);
}

Graph complete_pseudograph(std::size_t n) {
  if (n < 1) throw InvalidInput("complete pseudograph needs n >= 1");
  std::vector<Edge> edges;
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, edges, true);
}

IntegerMatrix all_ones(std::size_t m) {
  IntegerMatrix j(m, m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) j(a, b) = 1;
  return j;
}

// ---------------------------------------------------------------------------
// Isomorphism search: colour refinement on the disjoint union G + H, then
// individualize-and-refine backtracking.

namespace {

using Colors = std::vector<std::uint32_t>;

class IsoSearch {
 public:
  IsoSearch(const Graph& g, const Graph& h) : g_(g), h_(h), ng_(g.vertex_count()) {}

  Colors initial() const {
    std::map<std::pair<std::size_t, bool>, std::uint32_t> ids;
    std::vector<std::pair<std::size_t, bool>> keys;
    for (std::size_t x = 0; x < total(); ++x) {
      const Graph& gr = side(x);
      Vertex v = local(x);
      keys.emplace_back(gr.degree(v), gr.adjacent(v, v));
      ids.emplace(keys.back(), 0);
    }
    std::uint32_t next = 0;
    for (auto& [k, id] : ids) id = next++;
    Colors c(total());
    for (std::size_t x = 0; x < total(); ++x) c[x] = ids[keys[x]];
    return c;
  }

  /// Refine to the coarsest equitable partition; false if G and H disagree.
  bool refine(Colors& c) const {
    std::size_t classes = count_classes(c);
    while (true) {
      std::map<std::vector<std::uint32_t>, std::uint32_t> ids;
      std::vector<std::vector<std::uint32_t>> sig(total());
      for (std::size_t x = 0; x < total(); ++x) {
        const Graph& gr = side(x);
        const std::size_t off = x < ng_ ? 0 : ng_;
        auto& s = sig[x];
        for (Vertex w : gr.neighbors(local(x))) s.push_back(c[w + off]);
        std::sort(s.begin(), s.end());
        s.insert(s.begin(), c[x]);
        ids.emplace(s, 0);
      }
      std::uint32_t next = 0;
      for (auto& [k, id] : ids) id = next++;
      for (std::size_t x = 0; x < total(); ++x) c[x] = ids[sig[x]];
      const std::size_t now = ids.size();
      if (now == classes) break;
      classes = now;
    }
    std::vector<long> balance(classes, 0);
    for (std::size_t x = 0; x < total(); ++x) balance[c[x]] += x < ng_ ? 1 : -1;
    return std::all_of(balance.begin(), balance.end(), [](long b) { return b == 0; });
  }

  void individualize(Colors& c, Vertex gx, Vertex hy) const {
    std::uint32_t fresh = *std::max_element(c.begin(), c.end()) + 1;
    c[gx] = fresh;
    c[ng_ + hy] = fresh;
  }

  std::optional<Permutation> search(Colors c) const {
    if (!refine(c)) return std::nullopt;
    // Pick the smallest non-singleton class on the G side.
    std::map<std::uint32_t, std::vector<Vertex>> cells;
    for (Vertex x = 0; x < ng_; ++x) cells[c[x]].push_back(x);
    const std::vector<Vertex>* target = nullptr;
    std::uint32_t target_color = 0;
    for (const auto& [col, verts] : cells)
      if (verts.size() > 1 && (!target || verts.size() < target->size())) {
        target = &verts;
        target_color = col;
      }
    if (!target) {
      std::vector<Vertex> image(ng_);
      std::vector<Vertex> by_color(total());
      for (Vertex y = 0; y < ng_; ++y) by_color[c[ng_ + y]] = y;
      for (Vertex x = 0; x < ng_; ++x) image[x] = by_color[c[x]];
      Permutation p(std::move(image));
      if (!preserves(p)) return std::nullopt;
      return p;
    }
    const Vertex x = target->front();
    for (Vertex y = 0; y < ng_; ++y) {
      if (c[ng_ + y] != target_color) continue;
      Colors next = c;
      individualize(next, x, y);
      if (auto p = search(std::move(next))) return p;
    }
    return std::nullopt;
  }

  bool preserves(const Permutation& p) const {
    for (Vertex u = 0; u < ng_; ++u)
      for (Vertex v = u; v < ng_; ++v)
        if (g_.adjacent(u, v) != h_.adjacent(p(u), p(v))) return false;
    return true;
  }

 private:
  std::size_t total() const { return 2 * ng_; }
  const Graph& side(std::size_t x) const { return x < ng_ ? g_ : h_; }
  Vertex local(std::size_t x) const { return x < ng_ ? x : x - ng_; }
  static std::size_t count_classes(const Colors& c) {
    std::vector<std::uint32_t> s(c);
    std::sort(s.begin(), s.end());
    return static_cast<std::size_t>(std::unique(s.begin(), s.end()) - s.begin());
  }

  const Graph& g_;
  const Graph& h_;
  std::size_t ng_;
};

void check_cap(const Graph& g, std::size_t cap, const char* what) {
  if (g.vertex_count() > cap)
    throw CapExceeded(std::string(what) + ": " + std::to_string(g.vertex_count()) + " vertices exceeds cap " +
                      std::to_string(cap));
}

}  // namespace

std::optional<Permutation> is_isomorphic(const Graph& g, const Graph& h, std::size_t cap) {
  check_cap(g, cap, "isomorphism");
  check_cap(h, cap, "isomorphism");
  if (g.vertex_count() != h.vertex_count() || g.edges().size() != h.edges().size()) return std::nullopt;
  if (g.vertex_count() == 0) return Permutation();
  IsoSearch s(g, h);
  return s.search(s.initial());
}

bool is_automorphism(const Graph& g, const Permutation& p) {
  if (p.size() != g.vertex_count()) return false;
  for (auto [u, v] : g.edges())
    if (!g.adjacent(p(u), p(v))) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<Vertex> orbit_of(Vertex b, std::size_t n, const std::vector<const Permutation*>& gens) {
  std::vector<Vertex> orbit{b};
  std::vector<bool> seen(n, false);
  seen[b] = true;
  for (std::size_t i = 0; i < orbit.size(); ++i)
    for (const Permutation* p : gens) {
      Vertex w = (*p)(orbit[i]);
      if (!seen[w]) {
        seen[w] = true;
        orbit.push_back(w);
      }
    }
  std::sort(orbit.begin(), orbit.end());
  return orbit;
}

}  // namespace

AutomorphismGroup::AutomorphismGroup(const Graph& g, Vertex first_base_point, std::size_t cap)
    : n_(g.vertex_count()) {
  check_cap(g, cap, "automorphism group");
  if (n_ == 0) return;
  if (first_base_point >= n_) throw InvalidInput("base point out of range");
  IsoSearch s(g, g);

  // Descend: individualize base points until the refined partition is discrete.
  std::vector<Colors> level_colors;
  Colors c = s.initial();
  s.refine(c);
  while (true) {
    std::map<std::uint32_t, std::size_t> sizes;
    for (Vertex x = 0; x < n_; ++x) ++sizes[c[x]];
    Vertex b = n_;
    if (base_.empty()) {
      b = first_base_point;
    } else {
      for (Vertex x = 0; x < n_ && b == n_; ++x)
        if (sizes[c[x]] > 1) b = x;
    }
    if (b == n_) break;
    level_colors.push_back(c);
    base_.push_back(b);
    s.individualize(c, b, b);
    s.refine(c);
  }

  // Ascend: for each level, find one automorphism per new orbit point.
  orbits_.assign(base_.size(), {});
  for (std::size_t lvl = base_.size(); lvl-- > 0;) {
    const Colors& lc = level_colors[lvl];
    auto gens_at_or_above = [&] {
      std::vector<const Permutation*> out;
      for (std::size_t i = 0; i < generators_.size(); ++i)
        if (level_of_generator_[i] >= lvl) out.push_back(&generators_[i]);
      return out;
    };
    std::vector<Vertex> orbit = orbit_of(base_[lvl], n_, gens_at_or_above());
    for (Vertex w = 0; w < n_; ++w) {
      if (lc[n_ + w] != lc[base_[lvl]]) continue;
      if (std::binary_search(orbit.begin(), orbit.end(), w)) continue;
      Colors start = lc;
      s.individualize(start, base_[lvl], w);
      if (auto p = s.search(std::move(start))) {
        generators_.push_back(std::move(*p));
        level_of_generator_.push_back(lvl);
        orbit = orbit_of(base_[lvl], n_, gens_at_or_above());
      }
    }
    orbits_[lvl] = std::move(orbit);
  }
}

std::vector<Permutation> AutomorphismGroup::stabilizer_generators() const {
  std::vector<Permutation> out;
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (level_of_generator_[i] >= 1) out.push_back(generators_[i]);
  return out;
}

Integer AutomorphismGroup::order() const {
  Integer o = 1;
  for (const auto& orb : orbits_) o *= static_cast<unsigned long>(orb.size());
  return o;
}

std::vector<Permutation> AutomorphismGroup::elements(std::size_t cap) const {
  if (n_ > cap)
    throw CapExceeded("automorphism enumeration: " + std::to_string(n_) + " vertices exceeds cap " +
                      std::to_string(cap));
  if (order() > 5'000'000) throw CapExceeded("automorphism group too large to enumerate");
  // Transversal per level: an element of the level's stabilizer for every orbit point.
  std::vector<std::vector<Permutation>> transversals(base_.size());
  for (std::size_t lvl = 0; lvl < base_.size(); ++lvl) {
    std::map<Vertex, Permutation> reach{{base_[lvl], Permutation::identity(n_)}};
    std::vector<Vertex> frontier{base_[lvl]};
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      const Permutation here = reach.at(frontier[i]);
      for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
        if (level_of_generator_[gi] < lvl) continue;
        Permutation next = generators_[gi].compose(here);
        Vertex w = next(base_[lvl]);
        if (reach.emplace(w, next).second) frontier.push_back(w);
      }
    }
    for (auto& [w, p] : reach) transversals[lvl].push_back(std::move(p));
  }
  std::vector<Permutation> out{Permutation::identity(n_)};
  for (std::size_t lvl = base_.size(); lvl-- > 0;) {
    std::vector<Permutation> next;
    next.reserve(out.size() * transversals[lvl].size());
    for (const auto& t : transversals[lvl])
      for (const auto& rest : out) next.push_back(t.compose(rest));
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Permutation> automorphisms(const Graph& g, std::size_t cap) {
  check_cap(g, cap, "automorphism enumeration");
  return AutomorphismGroup(g, 0).elements(cap);
}

bool same_stabilizer(const Graph& g, Vertex u, Vertex v, std::size_t cap) {
  for (auto [a, b] : {std::pair{u, v}, std::pair{v, u}}) {
    AutomorphismGroup grp(g, a, cap);
    for (const auto& p : grp.stabilizer_generators())
      if (p(b) != b) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

std::string to_dot(const Graph& g, const std::string& name, const std::vector<std::string>& comments) {
  std::ostringstream os;
  os << "graph " << name << " {\n";
  for (const auto& c : comments) os << "  // " << c << "\n";
  for (Vertex v = 0; v < g.vertex_count(); ++v) os << "  " << v << " [label=\"" << g.labels()[v] << "\"];\n";
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

nlohmann::ordered_json to_json(const Graph& g) {
  nlohmann::ordered_json j;
  j["n"] = g.vertex_count();
  j["labels"] = g.labels();
  auto edges = nlohmann::ordered_json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  j["edges"] = std::move(edges);
  return j;
}

}  // namespace grover::graph
