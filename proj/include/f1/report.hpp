#pragma once

// Reports and verification runs behind the command-line tool.

#include "f1/corpus.hpp"
#include "f1/grothendieck.hpp"
#include "f1/oracle.hpp"
#include "f1/zeta.hpp"

#include "json.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace f1::cli {

struct GraphSummary {
  std::size_t vertices = 0;
  std::size_t edges = 0;
  std::size_t loose_edges = 0;  // 1-endpoint
  std::size_t free_edges = 0;   // 0-endpoint
  bool connected = true;
  friend bool operator==(const GraphSummary&, const GraphSummary&) = default;
};

struct TraceStep {
  std::string edge;
  std::vector<std::string> ball;
  std::vector<Integer> difference;  // ascending
  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

struct ComponentTrace {
  std::vector<std::string> spanning_tree;
  std::vector<TraceStep> steps;
  std::vector<Integer> tree_polynomial;
  friend bool operator==(const ComponentTrace&, const ComponentTrace&) = default;
};

struct Report {
  GraphSummary graph;
  std::vector<Integer> polynomial;  // ascending coefficients
  Integer euler_characteristic;
  std::map<unsigned, Integer> zeta;  // root k -> multiplicity a_k
  std::string zeta_text;
  std::string arithmetic_zeta_text;
  std::optional<std::map<std::uint64_t, std::uint64_t>> counts;
  std::optional<std::vector<ComponentTrace>> surgery_trace;
  std::map<std::string, bool> verdicts;

  bool all_verdicts_pass() const;
  friend bool operator==(const Report&, const Report&) = default;
};

struct ComputeOptions {
  std::vector<std::uint64_t> count_primes;
  bool surgery_trace = false;
  bool unicode = true;
  oracle::Limits limits;
};

Report build_report(const LooseGraph& g, const ComputeOptions& options);

nlohmann::json to_json(const Report& r);
Report report_from_json(const nlohmann::json& j);
std::string render_text(const Report& r, bool show_zeta);

struct Failure {
  std::string graph;
  std::string check;
  std::string detail;
};

struct VerifyOptions {
  oracle::Limits limits;
  std::vector<std::uint64_t> primes{2, 3, 5};
  /// Test hook: perturbs the clique polynomial inside the cross-check.
  bool inject_fault = false;
};

struct VerifySummary {
  std::size_t graphs = 0;
  std::size_t oracle_skipped = 0;
  std::vector<Failure> failures;
};

/// Cross-check plus invariant checks (vertex count, Euler characteristic,
/// sampled counts, affection principle on every full edge) for one graph.
void verify_graph(const std::string& name, const LooseGraph& g, const VerifyOptions& options, VerifySummary& out);

nlohmann::json to_json(const VerifySummary& s);

}  // namespace f1::cli
