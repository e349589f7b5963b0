#include "grover/walk.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <memory>
#include <numeric>
#include <set>
#include <stdexcept>

#include "grover/cyclotomic.hpp"
#include "grover/errors.hpp"
#include "grover/linalg.hpp"
#include "grover/number_field.hpp"

namespace grover::walk {

namespace {

void require_walkable(const Graph& g) {
  if (g.has_loops()) throw InvalidInput("Grover walk needs a simple graph; loops present");
  if (g.arcs().empty()) throw InvalidInput("Grover walk needs at least one edge");
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (g.degree(u) == 0) throw InvalidInput("isolated vertex " + g.labels()[u]);
}

std::size_t require_regular(const Graph& g) {
  require_walkable(g);
  auto k = g.regular_degree();
  if (!k) throw InvalidInput("graph is not regular");
  return *k;
}

std::vector<std::string> arc_labels(const Graph& g) {
  std::vector<std::string> out;
  for (const auto& a : g.arcs()) out.push_back("(" + g.labels()[a.tail] + "," + g.labels()[a.head] + ")");
  return out;
}

std::vector<std::size_t> inverse_arcs(const Graph& g) {
  std::vector<std::size_t> inv(g.arcs().size());
  for (std::size_t a = 0; a < inv.size(); ++a) inv[a] = g.arc_index(g.arcs()[a].head, g.arcs()[a].tail);
  return inv;
}

std::optional<std::uint64_t> rational_cos_order(const Rational& mu) {
  if (mu == 1) return 1;
  if (mu == -1) return 2;
  if (mu == 0) return 4;
  if (mu == Rational(1, 2)) return 6;
  if (mu == Rational(-1, 2)) return 3;
  return std::nullopt;
}

Surd sqrt_rational(const Rational& r) {
  Integer prod = r.get_num() * r.get_den();
  if (sgn(prod) < 0 || !prod.fits_ulong_p()) throw std::domain_error("square root argument out of range");
  return Surd::sqrt(prod.get_ui()) * Surd(Rational(1) / Rational(r.get_den()));
}

/// Roots of a monic quadratic with positive discriminant, larger first.
std::vector<Surd> quadratic_roots(const RationalPolynomial& f) {
  Rational half_b = f.coeff(1) / 2;
  Rational disc = half_b * half_b - f.coeff(0);
  Surd s = sqrt_rational(disc);
  return {Surd(Rational(-half_b)) + s, Surd(Rational(-half_b)) - s};
}

bool is_square(const Integer& x) { return sgn(x) >= 0 && mpz_perfect_square_p(x.get_mpz_t()) != 0; }

/// k-scaled form f(lambda) = k^d g(lambda / k) of a monic mu-polynomial g.
RationalPolynomial to_lambda(const RationalPolynomial& mu_poly, std::size_t k) {
  return mu_poly.scale_argument(make_rational(1, static_cast<long>(k))).monic();
}

RationalPolynomial to_mu(const RationalPolynomial& lambda_poly, std::size_t k) {
  return lambda_poly.scale_argument(Rational(static_cast<long>(k))).monic();
}

using FieldVector = std::vector<FieldElement>;

/// Kernel of A - theta I over Q(theta), theta a root of the factor (lambda form).
std::vector<FieldVector> factor_kernel(const Graph& g, const SpectralFactor& f, std::size_t k) {
  auto modulus = std::make_shared<const RationalPolynomial>(to_lambda(f.minimal_polynomial, k));
  const FieldElement theta = FieldElement::generator(modulus);
  const std::size_t n = g.vertex_count();
  Matrix<FieldElement> m(n, n);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v : g.neighbors(u)) m(u, v) = FieldElement(1);
    m(u, u) = m(u, u) - theta;
  }
  return nullspace(std::move(m));
}

bool touches(const std::vector<FieldVector>& basis, Vertex u) {
  return std::any_of(basis.begin(), basis.end(), [u](const FieldVector& b) { return !b[u].is_zero(); });
}

/// E e_u for the orthogonal projector onto span(basis).
FieldVector project(const std::vector<FieldVector>& basis, Vertex u) {
  const std::size_t m = basis.size();
  const std::size_t n = m ? basis[0].size() : 0;
  Matrix<FieldElement> gram(m, m);
  std::vector<FieldElement> rhs(m);
  for (std::size_t i = 0; i < m; ++i) {
    rhs[i] = basis[i][u];
    for (std::size_t j = 0; j < m; ++j) {
      FieldElement acc(0);
      for (std::size_t x = 0; x < n; ++x) acc += basis[i][x] * basis[j][x];
      gram(i, j) = acc;
    }
  }
  auto c = solve(std::move(gram), std::move(rhs));
  FieldVector out(n, FieldElement(0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t x = 0; x < n; ++x) out[x] += c[i] * basis[i][x];
  return out;
}

bool vectors_equal(const FieldVector& a, const FieldVector& b, bool negate) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != (negate ? -b[i] : b[i])) return false;
  return true;
}

/// Kernel over Q of residual(A) where residual is given in mu form.
std::vector<std::vector<Rational>> residual_kernel(const Graph& g, const SpectralReport& s) {
  RationalPolynomial f = to_lambda(s.residual, s.degree);
  RationalMatrix a(g.vertex_count(), g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u)) a(u, v) = 1;
  RationalMatrix acc(g.vertex_count(), g.vertex_count());
  for (int i = f.degree(); i >= 0; --i) {
    acc = acc * a;
    for (Vertex u = 0; u < g.vertex_count(); ++u) acc(u, u) += f.coeff(static_cast<std::size_t>(i));
  }
  return nullspace(std::move(acc));
}

}  // namespace

// ---------------------------------------------------------------------------

RationalMatrix time_evolution(const Graph& g) {
  require_walkable(g);
  const auto& arcs = g.arcs();
  const auto inv = inverse_arcs(g);
  RationalMatrix u(arcs.size(), arcs.size());
  for (std::size_t a = 0; a < arcs.size(); ++a) {
    const Vertex o = arcs[a].tail;
    const Rational w = make_rational(2, static_cast<long>(g.degree(o)));
    for (Vertex x : g.neighbors(o)) u(a, g.arc_index(x, o)) += w;
    u(a, inv[a]) -= 1;
  }
  u.row_labels = u.col_labels = arc_labels(g);
  return u;
}

IntegerMatrix shift(const Graph& g) {
  const auto inv = inverse_arcs(g);
  IntegerMatrix s(inv.size(), inv.size());
  for (std::size_t a = 0; a < inv.size(); ++a) s(a, inv[a]) = 1;
  return s;
}

IntegerMatrix head_incidence(const Graph& g) {
  IntegerMatrix k(g.vertex_count(), g.arcs().size());
  for (std::size_t a = 0; a < g.arcs().size(); ++a) k(g.arcs()[a].head, a) = 1;
  return k;
}

bool boundary_structure_holds(const Graph& g) {
  const IntegerMatrix k = head_incidence(g);
  IntegerMatrix d(g.vertex_count(), g.vertex_count());
  for (Vertex u = 0; u < g.vertex_count(); ++u) d(u, u) = static_cast<long>(g.degree(u));
  const IntegerMatrix s = shift(g);
  return k * k.transpose() == d && s * s == IntegerMatrix::identity(s.rows());
}

RationalMatrix discriminant(const Graph& g) {
  const std::size_t k = require_regular(g);
  RationalMatrix p(g.vertex_count(), g.vertex_count());
  const Rational w = make_rational(1, static_cast<long>(k));
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    for (Vertex v : g.neighbors(u)) p(u, v) = w;
  p.row_labels = p.col_labels = g.labels();
  return p;
}

std::vector<Rational> chebyshev_apply(const RationalMatrix& p, Vertex u, std::uint64_t tau) {
  if (u >= p.rows()) throw InvalidInput("vertex out of range");
  std::vector<Rational> prev(p.rows(), Rational(0));
  prev[u] = 1;
  if (tau == 0) return prev;
  std::vector<Rational> cur = p.apply(prev);
  for (std::uint64_t t = 1; t < tau; ++t) {
    std::vector<Rational> next = p.apply(cur);
    for (std::size_t i = 0; i < next.size(); ++i) next[i] = 2 * next[i] - prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

RationalMatrix chebyshev_matrix(const RationalMatrix& m, std::uint64_t tau) {
  RationalMatrix prev = RationalMatrix::identity(m.rows());
  if (tau == 0) return prev;
  RationalMatrix cur = m;
  for (std::uint64_t t = 1; t < tau; ++t) {
    RationalMatrix next = Rational(2) * (m * cur) - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

Surd chebyshev_value(const Surd& x, std::uint64_t tau) {
  Surd prev(1);
  if (tau == 0) return prev;
  Surd cur = x;
  for (std::uint64_t t = 1; t < tau; ++t) {
    Surd next = Surd(2) * x * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

bool chebyshev_identity_holds(const Graph& g, std::uint64_t tau_max) {
  const RationalMatrix u = time_evolution(g);
  RationalMatrix k(g.vertex_count(), g.arcs().size());
  for (std::size_t a = 0; a < g.arcs().size(); ++a) k(g.arcs()[a].head, a) = 1;
  const RationalMatrix kt = k.transpose();
  RationalMatrix d(g.vertex_count(), g.vertex_count());
  RationalMatrix q(g.vertex_count(), g.vertex_count());  // D^{-1} A
  for (Vertex x = 0; x < g.vertex_count(); ++x) {
    d(x, x) = static_cast<long>(g.degree(x));
    for (Vertex y : g.neighbors(x)) q(x, y) = make_rational(1, static_cast<long>(g.degree(x)));
  }
  RationalMatrix walked = kt;  // U^tau K^T
  RationalMatrix prev = RationalMatrix::identity(g.vertex_count());
  RationalMatrix cur = q;
  for (std::uint64_t tau = 0; tau <= tau_max; ++tau) {
    const RationalMatrix& cheb = tau == 0 ? prev : cur;
    if (k * walked != d * cheb) return false;
    walked = u * walked;
    if (tau >= 1) {
      RationalMatrix next = Rational(2) * (q * cur) - prev;
      prev = std::move(cur);
      cur = std::move(next);
    }
  }
  return true;
}

std::optional<std::uint64_t> is_periodic_bruteforce(const Graph& g, std::uint64_t tau_max) {
  require_walkable(g);
  if (tau_max > kMaxBruteforceTau)
    throw CapExceeded("tau_max " + std::to_string(tau_max) + " exceeds cap " + std::to_string(kMaxBruteforceTau));
  const auto& arcs = g.arcs();
  const auto inv = inverse_arcs(g);
  const std::size_t n = g.vertex_count();
  std::uint64_t scale = 1;
  for (Vertex v = 0; v < n; ++v) scale = std::lcm(scale, static_cast<std::uint64_t>(g.degree(v)));
  const Integer l(static_cast<unsigned long>(scale));
  std::vector<Integer> coin(n);
  for (Vertex v = 0; v < n; ++v) coin[v] = Integer(static_cast<unsigned long>(2 * scale / g.degree(v)));

  std::vector<std::size_t> columns;
  if (g.vertex_transitive_by_construction()) {
    for (std::size_t a = 0; a < arcs.size() && arcs[a].tail == 0; ++a) columns.push_back(a);
  } else {
    columns.resize(arcs.size());
    std::iota(columns.begin(), columns.end(), std::size_t{0});
  }

  std::uint64_t period = 1;
  std::vector<Integer> x(arcs.size()), next(arcs.size()), into(n);
  for (std::size_t col : columns) {
    std::fill(x.begin(), x.end(), Integer(0));
    x[col] = 1;
    Integer target = 1;
    std::optional<std::uint64_t> ret;
    for (std::uint64_t tau = 1; tau <= tau_max; ++tau) {
      std::fill(into.begin(), into.end(), Integer(0));
      for (std::size_t b = 0; b < arcs.size(); ++b)
        if (sgn(x[b]) != 0) into[arcs[b].head] += x[b];
      for (std::size_t a = 0; a < arcs.size(); ++a) next[a] = coin[arcs[a].tail] * into[arcs[a].tail] - l * x[inv[a]];
      std::swap(x, next);
      target *= l;
      if (x[col] != target) continue;
      bool clean = true;
      for (std::size_t a = 0; a < arcs.size() && clean; ++a)
        if (a != col && sgn(x[a]) != 0) clean = false;
      if (clean) {
        ret = tau;
        break;
      }
    }
    if (!ret) return std::nullopt;
    period = std::lcm(period, *ret);
    if (period > tau_max) return std::nullopt;
  }
  return period;
}

// ---------------------------------------------------------------------------

std::vector<const SpectralFactor*> SpectralReport::factors() const {
  std::vector<const SpectralFactor*> out;
  for (const auto* bucket : {&rational, &quadratic, &higher})
    for (const auto& f : *bucket) out.push_back(&f);
  return out;
}

std::uint64_t SpectralReport::multiplicity_of_one() const {
  for (const auto& f : rational)
    if (f.roots.front() == Surd(1)) return f.multiplicity;
  return 0;
}

SpectralReport classify_spectrum(const Graph& g) {
  const std::size_t k = require_regular(g);
  SpectralReport rep;
  rep.vertex_count = g.vertex_count();
  rep.degree = k;
  const IntegerMatrix a = g.adjacency();
  rep.adjacency_charpoly = characteristic_polynomial(a);
  RationalPolynomial rest = to_rational(rep.adjacency_charpoly);
  const long kl = static_cast<long>(k);

  // Eigenvalues of a regular graph lie in [-k, k]; rational ones are integers.
  for (long lambda = kl; lambda >= -kl && rest.degree() > 0; --lambda) {
    int mult = divide_out(rest, RationalPolynomial::linear_root(Rational(lambda)));
    if (mult == 0) continue;
    SpectralFactor f;
    Rational mu(lambda, kl);
    mu.canonicalize();
    f.minimal_polynomial = RationalPolynomial::linear_root(mu);
    f.multiplicity = static_cast<std::uint64_t>(mult);
    f.roots = {Surd(mu)};
    f.cos_order = rational_cos_order(mu);
    f.allowed = f.cos_order.has_value();
    rep.rational.push_back(std::move(f));
  }

  // cos(2 pi / n) pieces of degree >= 2.
  if (rest.degree() >= 2) {
    for (std::uint64_t n : cos_orders_up_to_degree(static_cast<unsigned>(rest.degree()))) {
      if (rest.degree() < 2) break;
      RationalPolynomial m = minimal_poly_cos(n);
      if (m.degree() < 2 || m.degree() > rest.degree()) continue;
      int mult = divide_out(rest, to_lambda(m, k));
      if (mult == 0) continue;
      SpectralFactor f;
      f.minimal_polynomial = m;
      f.multiplicity = static_cast<std::uint64_t>(mult);
      f.cos_order = n;
      f.allowed = true;
      if (m.degree() == 2) {
        f.roots = quadratic_roots(m);
        rep.quadratic.push_back(std::move(f));
      } else {
        rep.higher.push_back(std::move(f));
      }
    }
  }

  // Remaining quadratic factors, proposed numerically and confirmed exactly.
  if (rest.degree() >= 2) {
    Eigen::MatrixXd dense(g.vertex_count(), g.vertex_count());
    for (Vertex u = 0; u < g.vertex_count(); ++u)
      for (Vertex v = 0; v < g.vertex_count(); ++v) dense(u, v) = g.adjacent(u, v) ? 1.0 : 0.0;
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    std::vector<double> ev;
    for (Eigen::Index i = 0; i < solver.eigenvalues().size(); ++i) {
      double x = solver.eigenvalues()(i);
      if (ev.empty() || std::abs(ev.back() - x) > 1e-7) ev.push_back(x);
    }
    for (std::size_t i = 0; i < ev.size() && rest.degree() >= 2; ++i)
      for (std::size_t j = i + 1; j < ev.size() && rest.degree() >= 2; ++j) {
        const double s = ev[i] + ev[j], p = ev[i] * ev[j];
        if (std::abs(s - std::round(s)) > 1e-6 || std::abs(p - std::round(p)) > 1e-6) continue;
        const Integer si(static_cast<long>(std::lround(s))), pi(static_cast<long>(std::lround(p)));
        if (is_square(si * si - 4 * pi)) continue;
        RationalPolynomial cand({Rational(pi), Rational(-si), Rational(1)});
        int mult = divide_out(rest, cand);
        if (mult == 0) continue;
        SpectralFactor f;
        f.minimal_polynomial = to_mu(cand, k);
        f.multiplicity = static_cast<std::uint64_t>(mult);
        f.roots = quadratic_roots(f.minimal_polynomial);
        rep.quadratic.push_back(std::move(f));
      }
  }

  rep.residual = rest.degree() > 0 ? to_mu(rest, k) : RationalPolynomial::constant(Rational(1));
  auto by_value = [](const SpectralFactor& x, const SpectralFactor& y) {
    return value_less(y.roots.front(), x.roots.front());
  };
  std::sort(rep.rational.begin(), rep.rational.end(), by_value);
  std::sort(rep.quadratic.begin(), rep.quadratic.end(), by_value);

  rep.periodic = rep.residual.degree() == 0;
  std::uint64_t bound = 2;
  for (const auto* f : rep.factors()) {
    if (!f->allowed) rep.periodic = false;
    if (f->cos_order) bound = std::lcm(bound, *f->cos_order);
  }
  if (rep.periodic) rep.period_bound = bound;
  return rep;
}

std::optional<std::uint64_t> period(const Graph& g, const SpectralReport& spectrum) {
  if (!spectrum.periodic) return std::nullopt;
  auto p = is_periodic_bruteforce(g, *spectrum.period_bound);
  if (!p) throw std::logic_error("U^" + std::to_string(*spectrum.period_bound) + " != I for a graph classified periodic");
  return p;
}

std::optional<std::uint64_t> period(const Graph& g) { return period(g, classify_spectrum(g)); }

// ---------------------------------------------------------------------------

namespace {

PstReport find_pst_impl(const Graph& g, const SpectralReport& spectrum, std::optional<std::uint64_t> per,
                        std::optional<std::uint64_t> tau_max) {
  const std::size_t k = require_regular(g);
  const std::size_t n = g.vertex_count();
  PstReport rep;
  rep.vertex_transitive = g.vertex_transitive_by_construction();
  rep.periodic = spectrum.periodic;
  rep.period = per;
  if (spectrum.periodic) {
    rep.search_bound = *per - 1;
  } else if (rep.vertex_transitive) {
    rep.pruned_by_periodicity = true;
    return rep;
  } else if (tau_max) {
    rep.search_bound = *tau_max;
  } else {
    throw InvalidInput("PST search on a non-periodic graph that is not known to be vertex-transitive needs tau_max");
  }

  std::vector<Vertex> sources;
  if (rep.vertex_transitive) {
    sources.push_back(0);
  } else {
    sources.resize(n);
    std::iota(sources.begin(), sources.end(), Vertex{0});
  }
  // y_t = k^t T_t(A/k) e_u satisfies y_{t+1} = 2 A y_t - k^2 y_{t-1}.
  const Integer k2(static_cast<unsigned long>(k * k));
  std::set<PstEntry> found;
  for (Vertex u : sources) {
    std::vector<Integer> prev(n, Integer(0)), cur(n, Integer(0)), next(n);
    prev[u] = 1;
    for (Vertex v : g.neighbors(u)) cur[v] = 1;
    Integer scale(static_cast<unsigned long>(k));
    for (std::uint64_t tau = 1; tau <= rep.search_bound; ++tau) {
      if (tau > 1) {
        for (Vertex w = 0; w < n; ++w) {
          Integer s = 0;
          for (Vertex x : g.neighbors(w)) s += cur[x];
          next[w] = 2 * s - k2 * prev[w];
        }
        std::swap(prev, cur);
        std::swap(cur, next);
        scale *= static_cast<unsigned long>(k);
      }
      std::size_t nonzero = 0;
      Vertex hit = n;
      for (Vertex w = 0; w < n; ++w)
        if (sgn(cur[w]) != 0) {
          ++nonzero;
          hit = w;
        }
      if (nonzero != 1 || hit == u) continue;
      if (cur[hit] == scale) found.insert({u, hit, tau, 1});
      else if (cur[hit] == -scale) found.insert({u, hit, tau, -1});
    }
  }
  if (rep.vertex_transitive) {
    std::set<PstEntry> expanded;
    for (const auto& e : found)
      for (Vertex a = 0; a < n; ++a) expanded.insert({a, g.translations()[a][e.v], e.tau, e.gamma});
    found = std::move(expanded);
  }
  std::set<PstEntry> closed = found;
  for (const auto& e : found) closed.insert({e.v, e.u, e.tau, e.gamma});
  rep.pairs.assign(closed.begin(), closed.end());
  return rep;
}

}  // namespace

PstReport find_pst(const Graph& g, const SpectralReport& spectrum, std::optional<std::uint64_t> tau_max) {
  return find_pst_impl(g, spectrum, period(g, spectrum), tau_max);
}

PstReport find_pst(const Graph& g, std::optional<std::uint64_t> tau_max) {
  return find_pst(g, classify_spectrum(g), tau_max);
}

WalkReport analyze(const Graph& g, std::optional<std::uint64_t> tau_max) {
  WalkReport w;
  w.spectrum = classify_spectrum(g);
  w.period = period(g, w.spectrum);
  w.pst = find_pst_impl(g, w.spectrum, w.period, tau_max);
  return w;
}

// ---------------------------------------------------------------------------

std::vector<Surd> eigen_support(const Graph& g, const SpectralReport& spectrum, Vertex u) {
  if (u >= g.vertex_count()) throw InvalidInput("vertex out of range");
  if (!spectrum.higher.empty() || spectrum.residual.degree() > 0)
    throw UnsupportedDegree("eigenvalue of degree > 2 present; eigenvalue support needs rational or quadratic spectrum");
  std::vector<Surd> out;
  for (const auto* bucket : {&spectrum.rational, &spectrum.quadratic})
    for (const auto& f : *bucket)
      if (touches(factor_kernel(g, f, spectrum.degree), u))
        out.insert(out.end(), f.roots.begin(), f.roots.end());
  std::sort(out.begin(), out.end(), [](const Surd& x, const Surd& y) { return value_less(y, x); });
  return out;
}

std::vector<Surd> eigen_support(const Graph& g, Vertex u) { return eigen_support(g, classify_spectrum(g), u); }

bool projector_condition(const Graph& g, const SpectralReport& spectrum, Vertex u, Vertex v) {
  for (const auto* f : spectrum.factors()) {
    const auto basis = factor_kernel(g, *f, spectrum.degree);
    if (!touches(basis, u) && !touches(basis, v)) continue;
    const FieldVector pu = project(basis, u), pv = project(basis, v);
    if (!vectors_equal(pu, pv, false) && !vectors_equal(pu, pv, true)) return false;
  }
  if (spectrum.residual.degree() > 0) {
    for (const auto& w : residual_kernel(g, spectrum))
      if (!is_zero(w[u]) || !is_zero(w[v])) return false;
  }
  return true;
}

bool support_condition(const Graph& g, const SpectralReport& spectrum, Vertex u, std::uint64_t tau) {
  for (const auto* f : spectrum.factors()) {
    if (!touches(factor_kernel(g, *f, spectrum.degree), u)) continue;
    if (!f->roots.empty()) {
      for (const auto& r : f->roots) {
        Surd t = chebyshev_value(r, tau);
        if (t != Surd(1) && t != Surd(-1)) return false;
      }
    } else if (!f->cos_order || (2 * tau) % *f->cos_order != 0) {
      return false;
    }
  }
  if (spectrum.residual.degree() > 0) {
    for (const auto& w : residual_kernel(g, spectrum))
      if (!is_zero(w[u])) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------

nlohmann::ordered_json matrix_to_json(const RationalMatrix& m) {
  auto rows = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    auto row = nlohmann::ordered_json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).get_str());
    rows.push_back(std::move(row));
  }
  return rows;
}

nlohmann::ordered_json to_json(const SpectralReport& s) {
  nlohmann::ordered_json j;
  j["vertices"] = s.vertex_count;
  j["degree"] = s.degree;
  j["adjacency_charpoly"] = to_string(s.adjacency_charpoly, "x");
  std::vector<std::pair<Surd, const SpectralFactor*>> scalars;
  for (const auto* bucket : {&s.rational, &s.quadratic})
    for (const auto& f : *bucket)
      for (const auto& r : f.roots) scalars.emplace_back(r, &f);
  std::stable_sort(scalars.begin(), scalars.end(),
                   [](const auto& x, const auto& y) { return value_less(y.first, x.first); });
  auto values = nlohmann::ordered_json::array();
  for (const auto& [r, f] : scalars) {
    nlohmann::ordered_json e;
    e["value"] = r.to_string();
    e["multiplicity"] = f->multiplicity;
    e["kind"] = r.is_rational() ? "rational" : "quadratic";
    if (!r.is_rational()) e["d"] = r.radicand();
    e["allowed"] = f->allowed;
    e["cos_order"] = f->cos_order ? nlohmann::ordered_json(*f->cos_order) : nlohmann::ordered_json(nullptr);
    values.push_back(std::move(e));
  }
  for (const auto& f : s.higher) {
    nlohmann::ordered_json e;
    e["minimal_polynomial"] = to_string(f.minimal_polynomial, "mu");
    e["degree"] = f.degree();
    e["multiplicity"] = f.multiplicity;
    e["kind"] = "higher";
    e["allowed"] = f.allowed;
    e["cos_order"] = *f.cos_order;
    values.push_back(std::move(e));
  }
  j["eigenvalues"] = std::move(values);
  j["residual"] = s.residual.degree() > 0 ? nlohmann::ordered_json(to_string(s.residual, "mu"))
                                          : nlohmann::ordered_json(nullptr);
  j["periodic"] = s.periodic;
  j["period_bound"] = s.period_bound ? nlohmann::ordered_json(*s.period_bound) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json to_json(const PstReport& p, const Graph& g) {
  nlohmann::ordered_json j;
  auto pairs = nlohmann::ordered_json::array();
  for (const auto& e : p.pairs) {
    nlohmann::ordered_json x;
    x["u"] = g.labels()[e.u];
    x["v"] = g.labels()[e.v];
    x["tau"] = e.tau;
    x["gamma"] = e.gamma;
    pairs.push_back(std::move(x));
  }
  j["pairs"] = std::move(pairs);
  j["search_bound"] = p.search_bound;
  j["periodic"] = p.periodic;
  j["period"] = p.period ? nlohmann::ordered_json(*p.period) : nlohmann::ordered_json(nullptr);
  j["vertex_transitive"] = p.vertex_transitive;
  j["pruned_by_periodicity"] = p.pruned_by_periodicity;
  return j;
}

nlohmann::ordered_json to_json(const WalkReport& w, const Graph& g) {
  nlohmann::ordered_json j;
  j["spectrum"] = to_json(w.spectrum);
  j["periodic"] = w.spectrum.periodic;
  j["period"] = w.period ? nlohmann::ordered_json(*w.period) : nlohmann::ordered_json(nullptr);
  j["pst"] = to_json(w.pst, g);
  return j;
}

}  // namespace grover::walk
