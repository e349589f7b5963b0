#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <numeric>
#include <ostream>

#include "grover/errors.hpp"
#include "grover/harness.hpp"

namespace grover::cli {

namespace {

using nlohmann::ordered_json;

struct Config {
  std::string subcommand;
  std::string ring;
  std::string family = "unitary";
  std::string format = "json";
  std::string out;
  std::uint64_t tau_max = 0;       // 0: not given
  std::uint64_t period_bound = 120;
  std::uint64_t max_order = 16;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t ring_cap() {
  const char* env = std::getenv("GROVER_RING_CAP");
  if (env == nullptr || *env == '\0') return 36;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0' || v == 0) throw UsageError(std::string("GROVER_RING_CAP must be a positive integer, got '") + env + "'");
  return v;
}

ordered_json labels_of(const ring::ProductRing& r, const std::vector<ring::RingElement>& xs) {
  auto out = ordered_json::array();
  for (const auto& x : xs) out.push_back(r.format(x));
  return out;
}

void render_text(const ordered_json& j, std::ostream& os, int indent);

bool is_scalar_array(const ordered_json& j) {
  return j.is_array() && std::none_of(j.begin(), j.end(), [](const ordered_json& e) { return e.is_structured(); });
}

std::string scalar_text(const ordered_json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_null()) return "-";
  if (is_scalar_array(j)) {
    std::string s = "[";
    for (std::size_t i = 0; i < j.size(); ++i) s += (i ? ", " : "") + scalar_text(j[i]);
    return s + "]";
  }
  return j.dump();
}

// Plain-text rendering of the JSON report, one field per line.
void render_text(const ordered_json& j, std::ostream& os, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      if (v.is_structured() && !is_scalar_array(v)) {
        os << pad << k << ":\n";
        render_text(v, os, indent + 1);
      } else {
        os << pad << k << ": " << scalar_text(v) << '\n';
      }
    }
  } else if (j.is_array()) {
    for (const auto& e : j) {
      if (e.is_structured() && !is_scalar_array(e)) {
        os << pad << "-\n";
        render_text(e, os, indent + 1);
      } else {
        os << pad << "- " << scalar_text(e) << '\n';
      }
    }
  } else {
    os << pad << scalar_text(j) << '\n';
  }
}

void emit(const ordered_json& j, const Config& cfg, std::ostream& out) {
  if (cfg.format == "text") {
    render_text(j, out, 0);
  } else {
    out << j.dump(2) << '\n';
  }
}

ordered_json cmd_ring(const Config& cfg) {
  const auto r = ring::make_ring(cfg.ring);
  ordered_json j;
  j["ring"] = r.spec();
  j["order"] = r.order();
  j["cyclic"] = r.is_cyclic();
  auto factors = ordered_json::array();
  for (const auto& f : r.factors()) {
    ordered_json e;
    e["name"] = f.name();
    e["order"] = f.order();
    e["m"] = f.maximal_ideal_size();
    e["residue_size"] = f.residue_size();
    e["units"] = f.unit_count();
    factors.push_back(std::move(e));
  }
  j["factors"] = std::move(factors);
  j["m"] = r.maximal_ideal_product();
  j["unity"] = r.format(r.one());
  const auto us = ring::units(r);
  const auto q = ring::unit_squares(r);
  const auto t = ring::quadratic_connection(r);
  j["unit_count"] = us.elements.size();
  j["units"] = labels_of(r, us.elements);
  j["Q_size"] = q.size();
  j["Q"] = labels_of(r, q);
  j["T_size"] = t.elements.size();
  j["T"] = labels_of(r, t.elements);
  j["s_ring"] = ring::is_s_ring(r);
  return j;
}

void warn_disconnected(const graph::Graph& g, std::size_t components, std::ostream& err) {
  err << "warning: graph is disconnected (" << components << " components of " << g.vertex_count() / components
      << " vertices)\n";
}

int cmd_graph(const Config& cfg, std::ostream& out, std::ostream& err) {
  const auto r = ring::make_ring(cfg.ring);
  const auto fam = harness::parse_family(cfg.family);
  const auto g = harness::family_graph(r, fam);
  const auto comps = g.components();
  if (comps.size() > 1) warn_disconnected(g, comps.size(), err);
  const auto k = g.regular_degree();
  if (cfg.format == "dot") {
    std::vector<std::string> header{
        "ring " + r.spec() + ", family " + harness::to_string(fam),
        k ? "regular of degree " + std::to_string(*k) : std::string("not regular"),
        comps.size() == 1 ? std::string("connected") : "disconnected, " + std::to_string(comps.size()) + " components",
    };
    out << graph::to_dot(g, "G", header);
    return kOk;
  }
  ordered_json j;
  j["ring"] = r.spec();
  j["family"] = harness::to_string(fam);
  j["regular_degree"] = k ? ordered_json(*k) : ordered_json(nullptr);
  j["connected"] = comps.size() == 1;
  j["components"] = comps.size();
  j["graph"] = graph::to_json(g);
  emit(j, cfg, out);
  return kOk;
}

ordered_json cmd_walk(const Config& cfg, std::ostream& err) {
  const auto r = ring::make_ring(cfg.ring);
  const auto fam = harness::parse_family(cfg.family);
  const auto cap = ring_cap();
  if (r.order() > cap) {
    throw CapExceeded("ring order " + std::to_string(r.order()) + " exceeds the walk cap " + std::to_string(cap) +
                      " (set GROVER_RING_CAP to raise it)");
  }
  const auto g = harness::family_graph(r, fam);
  const auto comps = g.components();
  if (comps.size() > 1) warn_disconnected(g, comps.size(), err);
  const std::optional<std::uint64_t> tau_max = cfg.tau_max ? std::optional(cfg.tau_max) : std::nullopt;

  ordered_json j;
  j["ring"] = r.spec();
  j["family"] = harness::to_string(fam);
  j["order"] = r.order();
  j["degree"] = g.regular_degree().value_or(0);
  j["connected"] = comps.size() == 1;

  bool periodic = true, pst = false;
  std::uint64_t period = 1;
  auto per_component = ordered_json::array();
  for (const auto& c : comps) {
    const auto h = comps.size() == 1 ? g : g.induced(c);
    const auto w = walk::analyze(h, tau_max);
    const auto bf = walk::is_periodic_bruteforce(h, cfg.period_bound);
    ordered_json e;
    auto vs = ordered_json::array();
    for (auto v : c) vs.push_back(g.labels()[v]);
    e["vertices"] = std::move(vs);
    e["spectrum"] = walk::to_json(w.spectrum);
    e["periodic"] = w.spectrum.periodic;
    e["period"] = w.period ? ordered_json(*w.period) : ordered_json(nullptr);
    e["period_bruteforce"] = bf ? ordered_json(*bf) : ordered_json(nullptr);
    e["period_search_bound"] = cfg.period_bound;
    e["pst"] = walk::to_json(w.pst, h);
    per_component.push_back(std::move(e));
    periodic = periodic && w.period.has_value();
    if (w.period) period = std::lcm(period, *w.period);
    pst = pst || !w.pst.empty();
  }
  j["periodic"] = periodic;
  j["period"] = periodic ? ordered_json(period) : ordered_json(nullptr);
  j["pst"] = pst;
  j["components"] = std::move(per_component);
  return j;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  const auto fam = harness::parse_family(cfg.family);
  harness::VerifyOptions opts;
  opts.bruteforce_tau_max = cfg.period_bound;
  const auto records = harness::sweep(cfg.max_order, fam, opts, ring_cap());
  ordered_json j;
  j["family"] = harness::to_string(fam);
  j["max_order"] = cfg.max_order;
  std::size_t pass = 0, fail = 0, na = 0;
  auto recs = ordered_json::array();
  for (const auto& r : records) {
    switch (r.status) {
      case harness::Status::Pass: ++pass; break;
      case harness::Status::Fail: ++fail; break;
      case harness::Status::NotApplicable: ++na; break;
    }
    recs.push_back(harness::to_json(r));
  }
  j["summary"] = {{"rings", records.size()}, {"pass", pass}, {"fail", fail}, {"not_applicable", na}};
  j["records"] = std::move(recs);
  emit(j, cfg, out);
  return fail == 0 ? kOk : kVerificationFailed;
}

int dispatch(const Config& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.subcommand == "ring") {
    if (cfg.format == "dot") throw UsageError("--format dot only applies to the graph subcommand");
    emit(cmd_ring(cfg), cfg, out);
    return kOk;
  }
  if (cfg.subcommand == "graph") return cmd_graph(cfg, out, err);
  if (cfg.subcommand == "walk") {
    if (cfg.format == "dot") throw UsageError("--format dot only applies to the graph subcommand");
    emit(cmd_walk(cfg, err), cfg, out);
    return kOk;
  }
  if (cfg.format == "dot") throw UsageError("--format dot only applies to the graph subcommand");
  return cmd_verify(cfg, out);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Grover walks on unitary and quadratic unitary Cayley graphs over finite rings", "grover"};
  app.require_subcommand(1, 1);

  const std::string ring_help = "ring spec, e.g. Z12, \"GF(4) x Z3\", G(3), Zp[2,3]";
  auto add_family = [&](CLI::App* s) {
    s->add_option("--family", cfg.family, "unitary | quadratic-unitary")
        ->check(CLI::IsMember({"unitary", "quadratic-unitary"}));
  };
  auto add_out = [&](CLI::App* s) { s->add_option("--out", cfg.out, "write the report to this file"); };

  auto* ring_cmd = app.add_subcommand("ring", "ring structure: factors, units, squares, S-ring flag");
  ring_cmd->add_option("spec", cfg.ring, ring_help)->required();
  ring_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  add_out(ring_cmd);

  auto* graph_cmd = app.add_subcommand("graph", "build the Cayley graph and export DOT or JSON");
  graph_cmd->add_option("spec", cfg.ring, ring_help)->required();
  add_family(graph_cmd);
  graph_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "dot", "text"}));
  add_out(graph_cmd);

  auto* walk_cmd = app.add_subcommand("walk", "spectrum, periodicity and perfect state transfer of the Grover walk");
  walk_cmd->add_option("spec", cfg.ring, ring_help)->required();
  add_family(walk_cmd);
  walk_cmd->add_option("--tau-max", cfg.tau_max, "PST search bound for graphs without a period")
      ->check(CLI::PositiveNumber);
  walk_cmd->add_option("--period-bound", cfg.period_bound, "bound for the exact U-power period search")
      ->check(CLI::PositiveNumber);
  walk_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  add_out(walk_cmd);

  auto* verify_cmd = app.add_subcommand("verify", "compare predicted spectra, periodicity and PST with computation on every catalog ring");
  add_family(verify_cmd);
  verify_cmd->add_option("--max-order", cfg.max_order, "largest ring order in the sweep")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--period-bound", cfg.period_bound, "bound for the exact U-power period search")
      ->check(CLI::PositiveNumber);
  verify_cmd->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "text"}));
  add_out(verify_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  cfg.subcommand = app.get_subcommands().front()->get_name();

  std::ofstream file;
  if (!cfg.out.empty()) {
    file.open(cfg.out);
    if (!file) {
      err << "error: cannot open " << cfg.out << " for writing\n";
      return kUsage;
    }
  }
  std::ostream& sink = cfg.out.empty() ? out : file;

  try {
    return dispatch(cfg, sink, err);
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kCapExceeded;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace grover::cli
