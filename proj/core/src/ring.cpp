#include "grover/ring.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <regex>
#include <set>
#include <sstream>

#include "grover/errors.hpp"
#include "grover/rational.hpp"

namespace grover::ring {

namespace {

std::uint64_t checked_pow(std::uint64_t p, unsigned k) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < k; ++i) {
    if (r > kMaxMaterializedOrder / p) throw CapExceeded("local ring order " + std::to_string(p) + "^" +
                                                         std::to_string(k) + " exceeds materialization cap");
    r *= p;
  }
  return r;
}

// Polynomial helpers over Z_p, coefficients low to high.
std::vector<std::uint32_t> poly_mod_p(std::vector<std::uint32_t> a, const std::vector<std::uint32_t>& f,
                                      std::uint64_t p) {
  const std::size_t n = f.size() - 1;  // f monic of degree n
  for (std::size_t i = a.size(); i-- > n;) {
    std::uint64_t c = a[i] % p;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) {
      std::uint64_t sub = (c * f[j]) % p;
      a[i - n + j] = static_cast<std::uint32_t>((a[i - n + j] + p - sub) % p);
    }
  }
  a.resize(std::min(a.size(), n));
  return a;
}

bool divides_mod_p(const std::vector<std::uint32_t>& d, const std::vector<std::uint32_t>& f, std::uint64_t p) {
  auto r = poly_mod_p(f, d, p);
  return std::all_of(r.begin(), r.end(), [](std::uint32_t c) { return c == 0; });
}

std::string render_poly(const std::vector<std::uint32_t>& d, const std::string& var) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << "+";
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i];
    os << var;
    if (i > 1) os << "^" << i;
  }
  return first ? "0" : os.str();
}

}  // namespace

bool is_irreducible_mod_p(const std::vector<std::uint32_t>& poly, std::uint64_t p) {
  if (poly.size() < 2 || poly.back() != 1) return false;
  const unsigned n = static_cast<unsigned>(poly.size() - 1);
  for (unsigned deg = 1; deg <= n / 2; ++deg) {
    const std::uint64_t count = ipow(p, deg);
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> d(deg + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < deg; ++i) {
        d[i] = static_cast<std::uint32_t>(c % p);
        c /= p;
      }
      d[deg] = 1;
      if (divides_mod_p(d, poly, p)) return false;
    }
  }
  return true;
}

LocalRingSpec::LocalRingSpec(LocalKind kind, std::uint64_t p, unsigned k) : kind_(kind), p_(p), k_(k) {
  if (!is_prime(p)) throw ParseError(std::to_string(p) + " is not prime");
  if (k < 1) throw ParseError("exponent must be at least 1");
  order_ = checked_pow(p, k);
}

LocalRingSpec LocalRingSpec::integers_mod(std::uint64_t p, unsigned k) {
  return LocalRingSpec(LocalKind::IntegersModPrimePower, p, k);
}

LocalRingSpec LocalRingSpec::truncated_polynomial(std::uint64_t p, unsigned k) {
  if (k == 1) return integers_mod(p, 1);
  return LocalRingSpec(LocalKind::TruncatedPolynomial, p, k);
}

LocalRingSpec LocalRingSpec::galois_field(std::uint64_t p, unsigned n,
                                          std::optional<std::vector<std::uint32_t>> modulus) {
  if (n == 1 && !modulus) return integers_mod(p, 1);
  LocalRingSpec r(LocalKind::GaloisField, p, n);
  if (modulus) {
    if (modulus->size() != n + 1 || modulus->back() != 1) throw ParseError("modulus must be monic of degree n");
    for (auto c : *modulus)
      if (c >= p) throw ParseError("modulus coefficient out of range");
    if (!is_irreducible_mod_p(*modulus, p)) throw ParseError("supplied polynomial is reducible over Z_p");
    r.modulus_ = *modulus;
    return r;
  }
  const std::uint64_t count = ipow(p, n);
  for (std::uint64_t code = 0; code < count; ++code) {
    std::vector<std::uint32_t> f(n + 1, 0);
    std::uint64_t c = code;
    for (unsigned i = 0; i < n; ++i) {
      f[i] = static_cast<std::uint32_t>(c % p);
      c /= p;
    }
    f[n] = 1;
    if (is_irreducible_mod_p(f, p)) {
      r.modulus_ = std::move(f);
      return r;
    }
  }
  throw ParseError("no irreducible polynomial found");  // unreachable for prime p
}

std::uint64_t LocalRingSpec::maximal_ideal_size() const {
  return kind_ == LocalKind::GaloisField ? 1 : order_ / p_;
}

std::string LocalRingSpec::name() const {
  switch (kind_) {
    case LocalKind::IntegersModPrimePower:
      return "Z" + std::to_string(order_);
    case LocalKind::GaloisField:
      return "GF(" + std::to_string(order_) + ")";
    case LocalKind::TruncatedPolynomial:
      if (k_ == 2) return "G(" + std::to_string(p_) + ")";
      return "Zp[" + std::to_string(p_) + "," + std::to_string(k_) + "]";
  }
  return {};
}

std::vector<std::uint32_t> LocalRingSpec::digits(std::uint32_t a) const {
  std::vector<std::uint32_t> d(k_);
  for (unsigned i = 0; i < k_; ++i) {
    d[i] = static_cast<std::uint32_t>(a % p_);
    a = static_cast<std::uint32_t>(a / p_);
  }
  return d;
}

std::uint32_t LocalRingSpec::pack(const std::vector<std::uint32_t>& d) const {
  std::uint64_t code = 0;
  for (std::size_t i = std::min<std::size_t>(d.size(), k_); i-- > 0;) code = code * p_ + d[i] % p_;
  return static_cast<std::uint32_t>(code);
}

std::uint32_t LocalRingSpec::add(std::uint32_t a, std::uint32_t b) const {
  if (kind_ == LocalKind::IntegersModPrimePower) return static_cast<std::uint32_t>((std::uint64_t{a} + b) % order_);
  auto da = digits(a), db = digits(b);
  for (unsigned i = 0; i < k_; ++i) da[i] = static_cast<std::uint32_t>((std::uint64_t{da[i]} + db[i]) % p_);
  return pack(da);
}

std::uint32_t LocalRingSpec::neg(std::uint32_t a) const {
  if (kind_ == LocalKind::IntegersModPrimePower) return static_cast<std::uint32_t>((order_ - a) % order_);
  auto da = digits(a);
  for (auto& c : da) c = static_cast<std::uint32_t>((p_ - c) % p_);
  return pack(da);
}

std::uint32_t LocalRingSpec::mul(std::uint32_t a, std::uint32_t b) const {
  if (kind_ == LocalKind::IntegersModPrimePower) return static_cast<std::uint32_t>((std::uint64_t{a} * b) % order_);
  auto da = digits(a), db = digits(b);
  std::vector<std::uint32_t> prod(2 * k_ - 1, 0);
  for (unsigned i = 0; i < k_; ++i)
    for (unsigned j = 0; j < k_; ++j)
      prod[i + j] = static_cast<std::uint32_t>((prod[i + j] + std::uint64_t{da[i]} * db[j]) % p_);
  if (kind_ == LocalKind::TruncatedPolynomial) {
    prod.resize(k_);
    return pack(prod);
  }
  return pack(poly_mod_p(std::move(prod), modulus_, p_));
}

bool LocalRingSpec::is_unit(std::uint32_t a) const {
  switch (kind_) {
    case LocalKind::IntegersModPrimePower:
      return a % p_ != 0;
    case LocalKind::GaloisField:
      return a != 0;
    case LocalKind::TruncatedPolynomial:
      return a % p_ != 0;  // constant coefficient nonzero
  }
  return false;
}

std::string LocalRingSpec::format(std::uint32_t a) const {
  switch (kind_) {
    case LocalKind::IntegersModPrimePower:
      return std::to_string(a);
    case LocalKind::GaloisField:
      return render_poly(digits(a), "t");
    case LocalKind::TruncatedPolynomial: {
      auto d = digits(a);
      if (k_ != 2) return render_poly(d, "x");
      // a <-> x, b <-> 1
      std::string out;
      if (d[1] != 0) out += (d[1] == 1 ? "" : std::to_string(d[1])) + "a";
      if (d[0] != 0) out += (out.empty() ? "" : "+") + (d[0] == 1 ? std::string() : std::to_string(d[0])) + "b";
      return out.empty() ? "0" : out;
    }
  }
  return {};
}

bool normal_order_less(const LocalRingSpec& a, const LocalRingSpec& b) {
  if (a.residue_size() != b.residue_size()) return a.residue_size() > b.residue_size();
  if (a.order_ != b.order_) return a.order_ > b.order_;
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) < static_cast<int>(b.kind_);
  if (a.p_ != b.p_) return a.p_ < b.p_;
  return std::lexicographical_compare(a.modulus_.rbegin(), a.modulus_.rend(), b.modulus_.rbegin(),
                                      b.modulus_.rend());
}

// ---------------------------------------------------------------------------

ProductRing::ProductRing(std::vector<LocalRingSpec> factors) : factors_(std::move(factors)) {
  if (factors_.empty()) throw ParseError("ring needs at least one factor");
  std::stable_sort(factors_.begin(), factors_.end(), normal_order_less);
  for (const auto& f : factors_) {
    if (order_ > kMaxMaterializedOrder / f.order()) throw CapExceeded("ring order exceeds materialization cap");
    order_ *= f.order();
  }
  std::set<std::uint64_t> primes;
  cyclic_ = true;
  for (const auto& f : factors_) {
    if (f.kind() != LocalKind::IntegersModPrimePower || !primes.insert(f.prime()).second) cyclic_ = false;
  }
  if (cyclic_) {
    spec_ = "Z" + std::to_string(order_);
  } else {
    for (std::size_t i = 0; i < factors_.size(); ++i) spec_ += (i ? " x " : "") + factors_[i].name();
  }
  tag_ = std::hash<std::string>{}(spec_);

  const std::size_t n = static_cast<std::size_t>(order_);
  by_index_.resize(n);
  code_to_index_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<std::uint32_t> comps(factors_.size());
    if (cyclic_) {
      for (std::size_t f = 0; f < factors_.size(); ++f) comps[f] = static_cast<std::uint32_t>(i % factors_[f].order());
    } else {
      std::size_t rem = i;
      for (std::size_t f = factors_.size(); f-- > 0;) {
        comps[f] = static_cast<std::uint32_t>(rem % factors_[f].order());
        rem /= factors_[f].order();
      }
    }
    code_to_index_[code_of(comps)] = i;
    by_index_[i] = std::move(comps);
  }
}

std::size_t ProductRing::code_of(const std::vector<std::uint32_t>& comps) const {
  std::size_t code = 0;
  for (std::size_t f = 0; f < factors_.size(); ++f) code = code * factors_[f].order() + comps[f];
  return code;
}

std::uint64_t ProductRing::maximal_ideal_product() const {
  std::uint64_t m = 1;
  for (const auto& f : factors_) m *= f.maximal_ideal_size();
  return m;
}

std::uint64_t ProductRing::unit_count() const {
  std::uint64_t u = 1;
  for (const auto& f : factors_) u *= f.unit_count();
  return u;
}

void ProductRing::check(const RingElement& x) const {
  if (x.ring_tag != tag_ || x.components.size() != factors_.size())
    throw InvalidInput("element does not belong to ring " + spec_);
}

RingElement ProductRing::element(std::size_t index) const {
  if (index >= by_index_.size()) throw InvalidInput("element index out of range");
  return {by_index_[index], tag_};
}

std::size_t ProductRing::index_of(const RingElement& x) const {
  check(x);
  return code_to_index_[code_of(x.components)];
}

std::vector<RingElement> ProductRing::elements() const {
  std::vector<RingElement> out;
  out.reserve(by_index_.size());
  for (const auto& c : by_index_) out.push_back({c, tag_});
  return out;
}

std::string ProductRing::format(const RingElement& x) const {
  check(x);
  if (cyclic_) return std::to_string(index_of(x));
  if (factors_.size() == 1) return factors_[0].format(x.components[0]);
  std::string out = "(";
  for (std::size_t f = 0; f < factors_.size(); ++f) out += (f ? "," : "") + factors_[f].format(x.components[f]);
  return out + ")";
}

RingElement ProductRing::zero() const { return {std::vector<std::uint32_t>(factors_.size(), 0), tag_}; }

RingElement ProductRing::one() const {
  RingElement e = zero();
  for (std::size_t f = 0; f < factors_.size(); ++f) e.components[f] = factors_[f].one();
  return e;
}

RingElement ProductRing::add(const RingElement& x, const RingElement& y) const {
  check(x);
  check(y);
  RingElement r = x;
  for (std::size_t f = 0; f < factors_.size(); ++f) r.components[f] = factors_[f].add(x.components[f], y.components[f]);
  return r;
}

RingElement ProductRing::neg(const RingElement& x) const {
  check(x);
  RingElement r = x;
  for (std::size_t f = 0; f < factors_.size(); ++f) r.components[f] = factors_[f].neg(x.components[f]);
  return r;
}

RingElement ProductRing::mul(const RingElement& x, const RingElement& y) const {
  check(x);
  check(y);
  RingElement r = x;
  for (std::size_t f = 0; f < factors_.size(); ++f) r.components[f] = factors_[f].mul(x.components[f], y.components[f]);
  return r;
}

bool ProductRing::is_unit(const RingElement& x) const {
  check(x);
  for (std::size_t f = 0; f < factors_.size(); ++f)
    if (!factors_[f].is_unit(x.components[f])) return false;
  return true;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t parse_number(const std::string& s, const std::string& token) {
  try {
    std::size_t pos = 0;
    unsigned long long v = std::stoull(s, &pos);
    if (pos != s.size()) throw ParseError("bad number in '" + token + "'");
    return v;
  } catch (const std::out_of_range&) {
    throw ParseError("number out of range in '" + token + "'");
  }
}

void append_factor(const std::string& token, std::vector<LocalRingSpec>& out) {
  static const std::regex z_re(R"(Z(\d+))");
  static const std::regex gf_re(R"(GF\((\d+)\))");
  static const std::regex g_re(R"(G\((\d+)\))");
  static const std::regex zp_re(R"(Zp\[(\d+),(\d+)\])");
  std::smatch m;
  if (std::regex_match(token, m, zp_re)) {
    std::uint64_t p = parse_number(m[1], token);
    std::uint64_t k = parse_number(m[2], token);
    if (!is_prime(p)) throw ParseError("'" + token + "': " + std::to_string(p) + " is not prime");
    if (k < 1 || k > 64) throw ParseError("'" + token + "': exponent out of range");
    out.push_back(LocalRingSpec::truncated_polynomial(p, static_cast<unsigned>(k)));
  } else if (std::regex_match(token, m, z_re)) {
    std::uint64_t n = parse_number(m[1], token);
    if (n < 2) throw ParseError("'" + token + "': modulus must be at least 2");
    if (n > kMaxMaterializedOrder) throw CapExceeded("'" + token + "' exceeds materialization cap");
    for (const auto& pp : factorize(n)) out.push_back(LocalRingSpec::integers_mod(pp.prime, pp.exponent));
  } else if (std::regex_match(token, m, gf_re)) {
    std::uint64_t q = parse_number(m[1], token);
    auto pp = as_prime_power(q);
    if (pp.exponent == 0) throw ParseError("'" + token + "': " + std::to_string(q) + " is not a prime power");
    out.push_back(LocalRingSpec::galois_field(pp.prime, pp.exponent));
  } else if (std::regex_match(token, m, g_re)) {
    std::uint64_t p = parse_number(m[1], token);
    if (!is_prime(p)) throw ParseError("'" + token + "': " + std::to_string(p) + " is not prime");
    out.push_back(LocalRingSpec::truncated_polynomial(p, 2));
  } else {
    throw ParseError("unrecognized ring factor '" + token + "'");
  }
}

}  // namespace

ProductRing make_ring(const std::string& spec) {
  std::string compact;
  for (char c : spec)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) throw ParseError("empty ring spec");
  std::vector<LocalRingSpec> factors;
  std::size_t start = 0;
  while (true) {
    std::size_t pos = compact.find('x', start);
    std::string token = compact.substr(start, pos == std::string::npos ? std::string::npos : pos - start);
    if (token.empty()) throw ParseError("empty factor in ring spec '" + spec + "'");
    append_factor(token, factors);
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return ProductRing(std::move(factors));
}

std::optional<std::vector<LocalRingSpec>> three_mod_four_first(const ProductRing& r) {
  std::vector<LocalRingSpec> out;
  std::optional<LocalRingSpec> head;
  for (const auto& f : r.factors()) {
    auto q = f.residue_size();
    if (q % 4 == 3) {
      if (head) return std::nullopt;
      head = f;
    } else if (q % 4 == 1) {
      out.push_back(f);
    } else {
      return std::nullopt;
    }
  }
  if (!head) return std::nullopt;
  out.insert(out.begin(), *head);
  return out;
}

ConnectionSet units(const ProductRing& r) {
  ConnectionSet c;
  c.label = ConnectionKind::Units;
  for (const auto& x : r.elements())
    if (r.is_unit(x)) c.elements.push_back(x);
  return c;
}

std::vector<RingElement> unit_squares(const ProductRing& r) {
  std::vector<bool> seen(r.order(), false);
  for (const auto& u : units(r).elements) seen[r.index_of(r.mul(u, u))] = true;
  std::vector<RingElement> q;
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (seen[i]) q.push_back(r.element(i));
  return q;
}

ConnectionSet quadratic_connection(const ProductRing& r) {
  auto q = unit_squares(r);
  std::vector<bool> in(r.order(), false);
  for (const auto& x : q) {
    in[r.index_of(x)] = true;
    in[r.index_of(r.neg(x))] = true;
  }
  ConnectionSet c;
  c.label = ConnectionKind::QuadraticUnitsSymmetric;
  c.quadratic_size = q.size();
  for (std::size_t i = 0; i < in.size(); ++i)
    if (in[i]) c.elements.push_back(r.element(i));
  return c;
}

void validate_connection_set(const ProductRing& r, const ConnectionSet& c) {
  std::vector<bool> in(r.order(), false);
  for (const auto& x : c.elements) in[r.index_of(x)] = true;
  if (in[r.index_of(r.zero())]) throw InvalidInput("connection set contains 0");
  for (const auto& x : c.elements)
    if (!in[r.index_of(r.neg(x))]) throw InvalidInput("connection set is not closed under negation");
}

bool is_s_ring(const ProductRing& r) {
  return std::count_if(r.factors().begin(), r.factors().end(),
                       [](const LocalRingSpec& f) { return f.residue_size() == 2; }) <= 1;
}

std::vector<ProductRing> enumerate_rings(std::uint64_t max_order, std::uint64_t cap) {
  if (max_order > cap)
    throw CapExceeded("max order " + std::to_string(max_order) + " exceeds cap " + std::to_string(cap));
  std::vector<LocalRingSpec> catalog;
  for (std::uint64_t p = 2; p <= max_order; ++p) {
    if (!is_prime(p)) continue;
    unsigned k = 1;
    for (std::uint64_t q = p; q <= max_order; q *= p, ++k) {
      catalog.push_back(LocalRingSpec::integers_mod(p, k));
      if (k >= 2) {
        catalog.push_back(LocalRingSpec::truncated_polynomial(p, k));
        catalog.push_back(LocalRingSpec::galois_field(p, k));
      }
    }
  }
  std::vector<ProductRing> out;
  std::set<std::string> seen;
  std::vector<LocalRingSpec> chosen;
  std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t from, std::uint64_t order) {
    if (!chosen.empty()) {
      ProductRing r(chosen);
      if (seen.insert(r.spec()).second) out.push_back(std::move(r));
    }
    for (std::size_t i = from; i < catalog.size(); ++i) {
      if (order * catalog[i].order() > max_order) continue;
      chosen.push_back(catalog[i]);
      rec(i, order * catalog[i].order());
      chosen.pop_back();
    }
  };
  rec(0, 1);
  std::sort(out.begin(), out.end(), [](const ProductRing& a, const ProductRing& b) {
    return a.order() != b.order() ? a.order() < b.order() : a.spec() < b.spec();
  });
  return out;
}

}  // namespace grover::ring
