#include "grover/harness.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "grover/errors.hpp"
#include "grover/linalg.hpp"

namespace grover::harness {

namespace {

using ring::LocalRingSpec;

nlohmann::ordered_json optional_json(const std::optional<bool>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

nlohmann::ordered_json optional_json(const std::optional<std::uint64_t>& v) {
  return v ? nlohmann::ordered_json(*v) : nlohmann::ordered_json(nullptr);
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

// lambda_{B,C} for the factors in `rs` (all residues 1 mod 4), scaled by
// unit_count / 2^s. Calls f(lambda, multiplicity) for every disjoint (B, C).
template <class F>
void for_each_quadratic_eigenvalue(const std::vector<LocalRingSpec>& rs, F&& f) {
  Rational base(1);
  for (const auto& r : rs) base *= Rational(static_cast<unsigned long>(r.unit_count()));
  base /= Rational(Integer(1) << static_cast<unsigned long>(rs.size()));
  std::size_t combos = 1;
  for (std::size_t i = 0; i < rs.size(); ++i) combos *= 3;
  for (std::size_t code = 0; code < combos; ++code) {
    Surd denom(1);
    std::uint64_t mult = 1;
    int sign = 1;
    std::size_t c = code;
    for (const auto& r : rs) {
      const std::size_t choice = c % 3;  // 0: neither, 1: in B, 2: in C
      c /= 3;
      if (choice == 0) continue;
      const std::uint64_t q = r.residue_size();
      if (choice == 1) {
        denom *= Surd::sqrt(q) + Surd(1);
      } else {
        denom *= Surd::sqrt(q) - Surd(1);
        sign = -sign;
      }
      mult *= (q - 1) / 2;
    }
    f(Surd(base * sign) / denom, mult);
  }
}

IntPolynomial power(const IntPolynomial& p, std::size_t e) {
  IntPolynomial out = IntPolynomial::constant(Integer(1));
  for (std::size_t i = 0; i < e; ++i) out = out * p;
  return out;
}

}  // namespace

std::string to_string(Family f) { return f == Family::Unitary ? "unitary" : "quadratic-unitary"; }

Family parse_family(const std::string& s) {
  if (s == "unitary") return Family::Unitary;
  if (s == "quadratic-unitary") return Family::QuadraticUnitary;
  throw ParseError("unknown graph family '" + s + "' (expected unitary or quadratic-unitary)");
}

graph::Graph family_graph(const ProductRing& r, Family f) {
  return f == Family::Unitary ? graph::unitary_cayley(r) : graph::quadratic_unitary_cayley(r);
}

void PredictedSpectrum::add(const Surd& value, std::uint64_t multiplicity) {
  if (multiplicity == 0) return;
  for (auto& [v, m] : entries) {
    if (v == value) {
      m += multiplicity;
      return;
    }
  }
  entries.emplace_back(value, multiplicity);
  std::stable_sort(entries.begin(), entries.end(),
                   [](const auto& a, const auto& b) { return value_less(b.first, a.first); });
}

std::uint64_t PredictedSpectrum::total() const {
  std::uint64_t t = 0;
  for (const auto& e : entries) t += e.second;
  return t;
}

nlohmann::ordered_json PredictedSpectrum::to_json() const {
  auto out = nlohmann::ordered_json::array();
  for (const auto& [v, m] : entries) {
    nlohmann::ordered_json e;
    e["value"] = v.to_string();
    e["multiplicity"] = m;
    out.push_back(std::move(e));
  }
  return out;
}

PredictedSpectrum predicted_unitary_spectrum(const ProductRing& r) {
  const auto& fs = r.factors();
  const Rational units(static_cast<unsigned long>(r.unit_count()));
  PredictedSpectrum out;
  std::uint64_t nonzero = 0;
  for (std::size_t mask = 0; mask < (std::size_t{1} << fs.size()); ++mask) {
    std::uint64_t mult = 1;
    int sign = 1;
    for (std::size_t j = 0; j < fs.size(); ++j) {
      if (!(mask >> j & 1)) continue;
      mult *= fs[j].residue_size() - 1;
      sign = -sign;
    }
    out.add(Surd(units * sign / Rational(static_cast<unsigned long>(mult))), mult);
    nonzero += mult;
  }
  out.add(Surd(0), r.order() - nonzero);
  return out;
}

QuadraticRegime quadratic_regime(const ProductRing& r) {
  std::size_t three = 0;
  for (const auto& f : r.factors()) {
    const auto q = f.residue_size();
    if (q % 4 == 3) {
      ++three;
    } else if (q % 4 != 1) {
      return QuadraticRegime::Outside;
    }
  }
  if (three == 0) return QuadraticRegime::AllOneModFour;
  if (three == 1) return QuadraticRegime::OneThreeModFour;
  return QuadraticRegime::Outside;
}

std::string to_string(QuadraticRegime r) {
  switch (r) {
    case QuadraticRegime::AllOneModFour: return "all-1-mod-4";
    case QuadraticRegime::OneThreeModFour: return "one-3-mod-4";
    case QuadraticRegime::Outside: break;
  }
  return "outside";
}

std::optional<PredictedSpectrum> predicted_quc_spectrum(const ProductRing& r) {
  const auto regime = quadratic_regime(r);
  if (regime == QuadraticRegime::Outside) return std::nullopt;
  PredictedSpectrum out;
  std::uint64_t nonzero = 0;
  if (regime == QuadraticRegime::AllOneModFour) {
    for_each_quadratic_eigenvalue(r.factors(), [&](const Surd& lambda, std::uint64_t m) {
      out.add(lambda, m);
      nonzero += m;
    });
  } else {
    auto ordered = *ring::three_mod_four_first(r);
    const LocalRingSpec r0 = ordered.front();
    ordered.erase(ordered.begin());
    const std::uint64_t q0 = r0.residue_size();
    const Rational u0(static_cast<unsigned long>(r0.unit_count()));
    const Rational second = -u0 / Rational(static_cast<unsigned long>(q0 - 1));
    for_each_quadratic_eigenvalue(ordered, [&](const Surd& lambda, std::uint64_t m) {
      out.add(Surd(u0) * lambda, m);
      out.add(Surd(second) * lambda, (q0 - 1) * m);
      nonzero += q0 * m;
    });
  }
  out.add(Surd(0), r.order() - nonzero);
  return out;
}

bool predicted_periodic_unitary(const ProductRing& r) {
  // Residues are nonincreasing, so "first in {2, 3}, rest 2" reads off directly.
  const auto& fs = r.factors();
  const auto q1 = fs.front().residue_size();
  if (q1 != 2 && q1 != 3) return false;
  return std::all_of(fs.begin() + 1, fs.end(), [](const LocalRingSpec& f) { return f.residue_size() == 2; });
}

const std::vector<std::string>& unitary_pst_rings() {
  static const std::vector<std::string> rings{"Z2", "Z4", "G(2)", "Z6", "Z12", "Z3 x G(2)"};
  return rings;
}

bool predicted_pst_unitary(const ProductRing& r) {
  const auto& list = unitary_pst_rings();
  return std::find(list.begin(), list.end(), r.spec()) != list.end();
}

bool component_matches_pst_list(const graph::Graph& component) {
  for (const auto& spec : unitary_pst_rings()) {
    const auto r = ring::make_ring(spec);
    if (r.order() != component.vertex_count()) continue;
    if (graph::is_isomorphic(component, graph::unitary_cayley(r))) return true;
  }
  return false;
}

namespace {
bool designated_quc_pst(const ProductRing& r) { return r.spec() == "Z10" || r.spec() == "Z6"; }
}  // namespace

std::optional<bool> predicted_periodic_quc(const ProductRing& r) {
  if (designated_quc_pst(r)) return true;
  switch (quadratic_regime(r)) {
    case QuadraticRegime::AllOneModFour:
      return r.factor_count() == 1 && r.factors().front().residue_size() == 5;
    case QuadraticRegime::OneThreeModFour:
      return r.factor_count() == 1 && r.factors().front().residue_size() == 3;
    case QuadraticRegime::Outside: break;
  }
  return std::nullopt;
}

std::optional<bool> predicted_pst_quc(const ProductRing& r) {
  if (designated_quc_pst(r)) return true;
  if (quadratic_regime(r) == QuadraticRegime::Outside) return std::nullopt;
  return false;
}

bool spectrum_matches(const PredictedSpectrum& p, const IntPolynomial& charpoly) {
  if (charpoly.degree() < 0 || p.total() != static_cast<std::uint64_t>(charpoly.degree())) return false;
  Polynomial<Surd> prod = Polynomial<Surd>::constant(Surd(1));
  for (const auto& [lambda, m] : p.entries) {
    const auto lin = Polynomial<Surd>::linear_root(lambda);
    for (std::uint64_t i = 0; i < m; ++i) prod = prod * lin;
  }
  for (int i = 0; i <= charpoly.degree(); ++i) {
    if (prod.coeff(i) != Surd(Rational(charpoly.coeff(i)))) return false;
  }
  return true;
}

ProductRing residue_field(const ProductRing& local) {
  if (!local.is_local()) throw InvalidInput("residue field requested for non-local ring " + local.spec());
  const auto& f = local.factors().front();
  switch (f.kind()) {
    case ring::LocalKind::IntegersModPrimePower:
    case ring::LocalKind::TruncatedPolynomial:
      return ProductRing({LocalRingSpec::integers_mod(f.prime(), 1)});
    case ring::LocalKind::GaloisField: break;
  }
  return local;
}

std::optional<graph::Permutation> zad_check(const ProductRing& r) {
  if (!r.is_local()) throw InvalidInput("tensor decomposition needs a local ring, got " + r.spec());
  const auto& f = r.factors().front();
  if (f.residue_size() % 2 == 0) throw InvalidInput("tensor decomposition needs an odd residue size, got " + r.spec());
  const auto lhs = graph::quadratic_unitary_cayley(r);
  const auto rhs = graph::tensor_product(graph::quadratic_unitary_cayley(residue_field(r)),
                                         graph::complete_pseudograph(f.maximal_ideal_size()));
  return graph::is_isomorphic(lhs, rhs);
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::NotApplicable: break;
  }
  return "not-applicable";
}

VerificationRecord verify_ring(const ProductRing& r, Family f, const VerifyOptions& opts) {
  VerificationRecord rec;
  rec.ring = r.spec();
  rec.family = f;
  rec.order = r.order();
  rec.maximal_ideal_product = r.maximal_ideal_product();
  rec.s_ring = ring::is_s_ring(r);

  const auto g = family_graph(r, f);
  const auto comps = g.components();
  rec.components = comps.size();
  rec.connected = comps.size() == 1;
  rec.component = rec.connected ? g : g.induced(comps.front());
  rec.degree = g.regular_degree().value_or(0);

  const auto& h = rec.component;
  rec.spectrum = walk::classify_spectrum(h);
  rec.periodic_spectral = rec.spectrum.periodic;
  rec.period = walk::period(h, rec.spectrum);
  rec.period_bruteforce = walk::is_periodic_bruteforce(h, opts.bruteforce_tau_max);
  rec.pst = walk::find_pst(h, rec.spectrum, std::nullopt);

  bool failed = false;
  auto fail = [&](std::string msg) {
    failed = true;
    rec.details.push_back(std::move(msg));
  };
  auto note = [&](std::string msg) { rec.details.push_back(std::move(msg)); };

  if (!rec.connected) note("graph has " + std::to_string(rec.components) + " isomorphic components; walk analysed on the component of 0");

  // Exact classifier against exact powers of U.
  if (rec.period && *rec.period <= opts.bruteforce_tau_max) {
    if (rec.period_bruteforce != rec.period) fail("brute-force period disagrees with the spectral period");
  } else if (rec.period) {
    note("period " + std::to_string(*rec.period) + " exceeds the brute-force bound " +
         std::to_string(opts.bruteforce_tau_max));
  } else if (rec.period_bruteforce) {
    fail("brute force found U^" + std::to_string(*rec.period_bruteforce) + " = I but the spectrum is not periodic");
  }

  bool applicable = true;
  if (f == Family::Unitary) {
    rec.predicted_spectrum = predicted_unitary_spectrum(r);
    rec.predicted_periodic = predicted_periodic_unitary(r);
    if (rec.connected) {
      rec.predicted_pst = predicted_pst_unitary(r);
    } else {
      rec.pst_prediction_per_component = true;
      rec.predicted_pst = component_matches_pst_list(h);
    }
    if (rec.degree != r.unit_count()) fail("degree differs from |R^x|");
    if (rec.s_ring != rec.connected) fail("S-ring property disagrees with connectivity");
    if (rec.computed_pst() && rec.maximal_ideal_product > 2) fail("PST with m > 2");
  } else {
    const auto regime = quadratic_regime(r);
    rec.regime = to_string(regime);
    rec.predicted_spectrum = predicted_quc_spectrum(r);
    rec.predicted_periodic = predicted_periodic_quc(r);
    rec.predicted_pst = predicted_pst_quc(r);
    applicable = rec.predicted_periodic.has_value();
    if (designated_quc_pst(r)) note("designated PST ring; it has a residue-2 factor outside both residue regimes");
    if (regime != QuadraticRegime::Outside) {
      const auto q = ring::quadratic_connection(r).quadratic_size;
      const std::size_t expected = regime == QuadraticRegime::AllOneModFour ? q : 2 * q;
      if (rec.degree != expected) fail("degree differs from the regime's |T_R|");
    }
  }

  if (rec.predicted_spectrum && r.order() <= opts.spectrum_max_order) {
    const auto charpoly = power(rec.spectrum.adjacency_charpoly, rec.components);
    rec.spectrum_match = spectrum_matches(*rec.predicted_spectrum, charpoly);
    if (!*rec.spectrum_match) fail("predicted spectrum differs from char(A)");
  }
  if (rec.predicted_periodic && *rec.predicted_periodic != rec.periodic_spectral) {
    fail("periodicity: predicted " + yes_no(*rec.predicted_periodic) + ", computed " + yes_no(rec.periodic_spectral));
  }
  if (rec.predicted_pst && *rec.predicted_pst != rec.computed_pst()) {
    fail("PST: predicted " + yes_no(*rec.predicted_pst) + ", computed " + yes_no(rec.computed_pst()));
  }

  if (failed) {
    rec.status = Status::Fail;
  } else if (!applicable) {
    rec.status = Status::NotApplicable;
    note("ring lies outside both residue regimes");
  } else {
    rec.status = Status::Pass;
  }
  return rec;
}

std::vector<VerificationRecord> sweep(std::uint64_t max_order, Family f, const VerifyOptions& opts,
                                      std::uint64_t cap) {
  const auto rings = ring::enumerate_rings(max_order, cap);
  std::vector<VerificationRecord> out(rings.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < rings.size();) {
      try {
        out[i] = verify_ring(rings[i], f, opts);
      } catch (const std::exception& e) {
        VerificationRecord rec;
        rec.ring = rings[i].spec();
        rec.family = f;
        rec.order = rings[i].order();
        rec.status = Status::Fail;
        rec.details.push_back(std::string("error: ") + e.what());
        out[i] = std::move(rec);
      }
    }
  };
  unsigned threads = opts.threads != 0 ? opts.threads : std::max(1U, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(rings.size(), 1)));
  std::vector<std::future<void>> tasks;
  for (unsigned t = 0; t < threads; ++t) tasks.push_back(std::async(std::launch::async, worker));
  for (auto& t : tasks) t.get();
  return out;
}

nlohmann::ordered_json to_json(const VerificationRecord& r) {
  nlohmann::ordered_json j;
  j["ring"] = r.ring;
  j["family"] = to_string(r.family);
  j["order"] = r.order;

  nlohmann::ordered_json p;
  if (r.family == Family::QuadraticUnitary) p["regime"] = r.regime;
  p["periodic"] = optional_json(r.predicted_periodic);
  p["pst"] = optional_json(r.predicted_pst);
  p["pst_basis"] = r.pst_prediction_per_component ? "component" : "ring";
  p["spectrum"] = r.predicted_spectrum ? r.predicted_spectrum->to_json() : nlohmann::ordered_json(nullptr);
  j["predicted"] = std::move(p);

  nlohmann::ordered_json c;
  c["connected"] = r.connected;
  c["components"] = r.components;
  c["degree"] = r.degree;
  c["s_ring"] = r.s_ring;
  c["m"] = r.maximal_ideal_product;
  c["periodic"] = r.periodic_spectral;
  c["period"] = optional_json(r.period);
  c["period_bruteforce"] = optional_json(r.period_bruteforce);
  c["pst"] = !r.pst.empty();
  if (r.component.vertex_count() > 0) {
    c["spectrum"] = walk::to_json(r.spectrum);
    c["pst_pairs"] = walk::to_json(r.pst, r.component)["pairs"];
  }
  c["spectrum_match"] = optional_json(r.spectrum_match);
  j["computed"] = std::move(c);

  j["status"] = to_string(r.status);
  j["details"] = r.details;
  return j;
}

}  // namespace grover::harness
