#include "f1/report.hpp"

#include <algorithm>
#include <sstream>

namespace f1::cli {

using nlohmann::json;

namespace {

json integer_to_json(const Integer& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return json(v.convert_to<std::int64_t>());
  return json(v.str());
}

Integer integer_from_json(const json& j) {
  if (j.is_string()) return Integer(j.get<std::string>());
  return Integer(j.get<std::int64_t>());
}

json ascending_to_json(const std::vector<Integer>& v) {
  json a = json::array();
  for (const auto& c : v) a.push_back(integer_to_json(c));
  return a;
}

std::vector<Integer> ascending_from_json(const json& j) {
  std::vector<Integer> v;
  for (const auto& c : j) v.push_back(integer_from_json(c));
  return v;
}

ComponentTrace make_trace(const SurgeryTrace& t) {
  ComponentTrace c;
  c.spanning_tree.assign(t.spanning_tree.begin(), t.spanning_tree.end());
  for (const auto& s : t.steps) c.steps.push_back({s.edge, {s.ball.begin(), s.ball.end()}, s.difference.ascending()});
  c.tree_polynomial = t.tree_polynomial.ascending();
  return c;
}

}  // namespace

bool Report::all_verdicts_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

Report build_report(const LooseGraph& g, const ComputeOptions& options) {
  Report r;
  r.graph = {g.vertices().size(), g.edges().size(), g.loose_edge_count(), g.free_edge_count(), g.is_connected()};
  const LPolynomial p = class_of(g);
  r.polynomial = p.ascending();
  r.euler_characteristic = euler_characteristic(p);
  const ZetaF1 z = zeta_from_polynomial(p);
  r.zeta = z.exponents();
  r.zeta_text = z.render(options.unicode);
  r.arithmetic_zeta_text = render_arithmetic_zeta(p, options.unicode);

  r.verdicts["polynomial_at_1_is_vertex_count"] = p.eval(Integer(1)) == Integer(g.vertices().size());
  r.verdicts["euler_characteristic_is_polynomial_at_1"] = r.euler_characteristic == p.eval(Integer(1));

  if (!options.count_primes.empty()) {
    std::map<std::uint64_t, std::uint64_t> counts;
    bool match = true;
    for (auto q : options.count_primes) {
      counts[q] = oracle::enumerate_points(g, q, options.limits);
      match = match && Integer(counts[q]) == p.eval(Integer(q));
    }
    r.counts = std::move(counts);
    r.verdicts["counts_match_polynomial"] = match;
  }

  if (options.surgery_trace) {
    std::vector<ComponentTrace> traces;
    LPolynomial total;
    for (const auto& comp : components(g)) {
      SurgeryResult s = surgery(comp);
      total += s.polynomial;
      traces.push_back(make_trace(s.trace));
    }
    r.surgery_trace = std::move(traces);
    r.verdicts["surgery_matches_clique"] = total == p;
  }
  return r;
}

json to_json(const Report& r) {
  json j;
  j["graph"] = {{"vertices", r.graph.vertices},
                {"edges", r.graph.edges},
                {"loose_edges", r.graph.loose_edges},
                {"free_edges", r.graph.free_edges},
                {"connected", r.graph.connected}};
  j["polynomial"] = ascending_to_json(r.polynomial);
  j["euler_characteristic"] = integer_to_json(r.euler_characteristic);
  json zeta = json::array();
  for (const auto& [k, a] : r.zeta) zeta.push_back({{"root", k}, {"multiplicity", integer_to_json(a)}});
  j["zeta"] = zeta;
  j["zeta_text"] = r.zeta_text;
  j["arithmetic_zeta"] = r.arithmetic_zeta_text;
  if (r.counts) {
    json counts = json::object();
    for (const auto& [q, n] : *r.counts) counts[std::to_string(q)] = n;
    j["counts"] = counts;
  }
  if (r.surgery_trace) {
    json traces = json::array();
    for (const auto& t : *r.surgery_trace) {
      json steps = json::array();
      for (const auto& s : t.steps)
        steps.push_back({{"edge", s.edge}, {"ball", s.ball}, {"difference", ascending_to_json(s.difference)}});
      traces.push_back({{"spanning_tree", t.spanning_tree},
                        {"steps", steps},
                        {"tree_polynomial", ascending_to_json(t.tree_polynomial)}});
    }
    j["surgery_trace"] = traces;
  }
  j["verdicts"] = r.verdicts;
  return j;
}

Report report_from_json(const json& j) {
  Report r;
  const json& g = j.at("graph");
  r.graph = {g.at("vertices").get<std::size_t>(), g.at("edges").get<std::size_t>(),
             g.at("loose_edges").get<std::size_t>(), g.at("free_edges").get<std::size_t>(),
             g.at("connected").get<bool>()};
  r.polynomial = ascending_from_json(j.at("polynomial"));
  r.euler_characteristic = integer_from_json(j.at("euler_characteristic"));
  for (const auto& z : j.at("zeta")) r.zeta[z.at("root").get<unsigned>()] = integer_from_json(z.at("multiplicity"));
  r.zeta_text = j.at("zeta_text").get<std::string>();
  r.arithmetic_zeta_text = j.at("arithmetic_zeta").get<std::string>();
  if (j.contains("counts")) {
    std::map<std::uint64_t, std::uint64_t> counts;
    for (const auto& [q, n] : j.at("counts").items()) counts[std::stoull(q)] = n.get<std::uint64_t>();
    r.counts = std::move(counts);
  }
  if (j.contains("surgery_trace")) {
    std::vector<ComponentTrace> traces;
    for (const auto& t : j.at("surgery_trace")) {
      ComponentTrace c;
      c.spanning_tree = t.at("spanning_tree").get<std::vector<std::string>>();
      for (const auto& s : t.at("steps"))
        c.steps.push_back({s.at("edge").get<std::string>(), s.at("ball").get<std::vector<std::string>>(),
                           ascending_from_json(s.at("difference"))});
      c.tree_polynomial = ascending_from_json(t.at("tree_polynomial"));
      traces.push_back(std::move(c));
    }
    r.surgery_trace = std::move(traces);
  }
  r.verdicts = j.at("verdicts").get<std::map<std::string, bool>>();
  return r;
}

std::string render_text(const Report& r, bool show_zeta) {
  std::ostringstream out;
  out << "vertices: " << r.graph.vertices << "  edges: " << r.graph.edges << " (loose " << r.graph.loose_edges
      << ", free " << r.graph.free_edges << ")  connected: " << (r.graph.connected ? "yes" : "no") << "\n";
  out << "class: " << LPolynomial::from_ascending(r.polynomial).to_string() << "\n";
  out << "euler characteristic: " << r.euler_characteristic << "\n";
  if (show_zeta) {
    out << "F1-zeta: " << r.zeta_text << "\n";
    out << "arithmetic zeta: " << r.arithmetic_zeta_text << "\n";
  }
  if (r.counts)
    for (const auto& [q, n] : *r.counts) out << "count q=" << q << ": " << n << "\n";
  if (r.surgery_trace) {
    for (std::size_t c = 0; c < r.surgery_trace->size(); ++c) {
      const auto& t = (*r.surgery_trace)[c];
      out << "surgery component " << c << ": tree {";
      for (std::size_t i = 0; i < t.spanning_tree.size(); ++i) out << (i ? " " : "") << t.spanning_tree[i];
      out << "}\n";
      for (const auto& s : t.steps) {
        out << "  resolve " << s.edge << " on B = {";
        for (std::size_t i = 0; i < s.ball.size(); ++i) out << (i ? " " : "") << s.ball[i];
        out << "}: " << LPolynomial::from_ascending(s.difference).to_string() << "\n";
      }
      out << "  tree class: " << LPolynomial::from_ascending(t.tree_polynomial).to_string() << "\n";
    }
  }
  for (const auto& [name, ok] : r.verdicts) out << (ok ? "ok   " : "FAIL ") << name << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// Verification

void verify_graph(const std::string& name, const LooseGraph& g, const VerifyOptions& options, VerifySummary& out) {
  ++out.graphs;
  auto fail = [&](std::string check, std::string detail) { out.failures.push_back({name, std::move(check), std::move(detail)}); };

  oracle::CrossCheckOptions cc{options.limits, options.inject_fault ? LPolynomial(1) : LPolynomial()};
  const oracle::CrossCheckReport report = oracle::cross_check(g, cc);
  if (!report.interpolated) ++out.oracle_skipped;
  if (!report.all_equal) fail("cross_check", report.describe());

  const LPolynomial p = class_of(g);
  if (p.eval(Integer(1)) != Integer(g.vertices().size()))
    fail("vertex_count", "P(1) = " + p.eval(Integer(1)).str() + ", |V| = " + std::to_string(g.vertices().size()));
  if (euler_characteristic(p) != zeta_from_polynomial(p).euler_characteristic())
    fail("euler_characteristic", "exponent sum differs from P(1)");

  for (auto q : options.primes) {
    try {
      const std::uint64_t n = oracle::enumerate_points(g, q, options.limits);
      if (Integer(n) != p.eval(Integer(q)))
        fail("count_q" + std::to_string(q), "oracle " + std::to_string(n) + " vs P(q) = " + p.eval(Integer(q)).str());
    } catch (const oracle::LimitExceeded&) {
    }
  }

  for (const auto& e : g.edges()) {
    if (!e.is_full()) continue;
    const LPolynomial global = class_of(g) - class_of(resolve_edge(g, e.tag));
    const LPolynomial local = affection_difference(g, e.tag);
    if (global != local)
      fail("affection_" + e.endpoints[0] + e.endpoints[1], "global " + global.to_string() + " vs local " + local.to_string());
  }
}

nlohmann::json to_json(const VerifySummary& s) {
  json failures = json::array();
  for (const auto& f : s.failures) failures.push_back({{"graph", f.graph}, {"check", f.check}, {"detail", f.detail}});
  return {{"graphs", s.graphs}, {"oracle_skipped", s.oracle_skipped}, {"failures", failures}, {"pass", s.failures.empty()}};
}

}  // namespace f1::cli
