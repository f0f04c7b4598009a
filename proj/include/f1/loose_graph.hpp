#pragma once

// Loose graphs: finite graphs whose edges may have two, one, or zero
// endpoints. A 1-endpoint ("loose") edge is an affine direction at its
// vertex; a 0-endpoint ("free loose") edge stands for a copy of G_m.

#include <cstddef>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace f1 {

using VertexId = std::string;
using EdgeTag = std::string;

/// Structural violation: loops, parallel edges, unknown vertices or edges.
class GraphError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed graph text; carries the 1-based offending line.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

enum class EdgeKind { Full, Loose, Free };

struct Edge {
  EdgeTag tag;
  std::vector<VertexId> endpoints;  // sorted, 0..2 distinct entries

  EdgeKind kind() const {
    switch (endpoints.size()) {
      case 2: return EdgeKind::Full;
      case 1: return EdgeKind::Loose;
      default: return EdgeKind::Free;
    }
  }
  bool is_full() const { return endpoints.size() == 2; }
  bool touches(std::string_view v) const {
    for (const auto& e : endpoints)
      if (e == v) return true;
    return false;
  }
};

class LooseGraph {
 public:
  LooseGraph() = default;

  /// Adding an existing vertex is a no-op.
  void add_vertex(const VertexId& v);
  /// Endpoints are added to the vertex set when missing.
  EdgeTag add_edge(const VertexId& u, const VertexId& v);
  EdgeTag add_loose(const VertexId& v);
  EdgeTag add_free_loose();

  /// Removes an edge by tag; vertices stay.
  void remove_edge(const EdgeTag& tag);

  const std::set<VertexId>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }

  bool has_vertex(std::string_view v) const { return vertices_.find(std::string(v)) != vertices_.end(); }
  const Edge& edge(const EdgeTag& tag) const;
  std::optional<EdgeTag> find_edge(const VertexId& u, const VertexId& v) const;

  /// Incident full edges plus loose edges at v.
  std::size_t degree(const VertexId& v) const;
  std::size_t max_degree() const;
  /// Sorted neighbors through full edges.
  std::vector<VertexId> neighbors(const VertexId& v) const;

  std::size_t full_edge_count() const;
  std::size_t loose_edge_count() const;
  std::size_t free_edge_count() const;

  /// Connectivity of the reduced graph; the empty vertex set counts as connected.
  bool is_connected() const;

  /// Structural equality: same vertices and the same multiset of endpoint
  /// sets. Tags are labels and do not take part.
  friend bool operator==(const LooseGraph& a, const LooseGraph& b);

 private:
  EdgeTag next_tag();
  void push_edge(Edge e);

  std::set<VertexId> vertices_;
  std::vector<Edge> edges_;
  std::size_t tag_counter_ = 0;
};

/// Ordinary graph obtained by giving every loose edge its missing endpoints.
struct AmbientEmbedding {
  std::vector<VertexId> vertices;  // originals (sorted) first, then added ones
  std::size_t original_count = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  /// Added vertices belonging to 0-endpoint edges.
  std::vector<std::size_t> free_edge_vertices;

  std::size_t size() const { return vertices.size(); }
  std::vector<std::set<std::size_t>> closed_neighborhoods() const;
};

struct TreeStats {
  std::vector<std::size_t> degrees;  // d_1 < ... < d_k, all > 1
  std::vector<std::size_t> counts;   // n_i
  long long internal = -1;           // I = sum n_i - 1
  long long ends = 0;                // E, vertices of degree 1
  std::size_t isolated = 0;          // vertices of degree 0
  std::size_t free_edges = 0;        // 0-endpoint edges alongside the tree

  friend bool operator==(const TreeStats&, const TreeStats&) = default;
};

LooseGraph parse_graph(std::string_view text);
/// Canonical text: vertex lines sorted, then edge lines sorted.
std::string render_graph(const LooseGraph& g);

AmbientEmbedding ambient_completion(const LooseGraph& g);

/// Replaces the full edge uv by one loose edge at u and one at v.
LooseGraph resolve_edge(const LooseGraph& g, const EdgeTag& e);

/// B(c, r) for r in {0, 1}.
std::set<VertexId> ball(const LooseGraph& g, const VertexId& c, int radius);

/// Induced loose graph on s; full edges leaving s become loose edges at the
/// endpoint inside s so every retained vertex keeps its degree. Free loose
/// edges are not incident to s and are dropped.
LooseGraph restrict_to(const LooseGraph& g, const std::set<VertexId>& s);

/// Drops all 1- and 0-endpoint edges.
LooseGraph reduce(const LooseGraph& g);

/// Deterministic breadth-first spanning tree (smallest vertex first,
/// neighbors in sorted order). Throws GraphError when disconnected.
std::set<EdgeTag> spanning_tree(const LooseGraph& g);

/// Every spanning tree of the reduced graph, as sets of full-edge tags.
std::vector<std::set<EdgeTag>> all_spanning_trees(const LooseGraph& g);

/// Nonempty cliques of the full-edge graph by size, then lexicographically.
std::vector<std::vector<VertexId>> cliques(const LooseGraph& g);

bool is_loose_tree(const LooseGraph& g);
TreeStats tree_stats(const LooseGraph& g);

/// Connected components of the reduced graph with their incident loose
/// edges; each free loose edge forms its own component.
std::vector<LooseGraph> components(const LooseGraph& g);

/// Disjoint union; vertex ids of b are prefixed when they clash with a.
LooseGraph disjoint_union(const LooseGraph& a, const LooseGraph& b);

}  // namespace f1
