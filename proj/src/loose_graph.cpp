#include "f1/loose_graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <sstream>

namespace f1 {

namespace {

bool valid_id(std::string_view id) {
  if (id.empty()) return false;
  return std::all_of(id.begin(), id.end(), [](char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::istringstream in{std::string(line)};
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

std::vector<std::vector<VertexId>> sorted_endpoint_multiset(const LooseGraph& g) {
  std::vector<std::vector<VertexId>> out;
  out.reserve(g.edges().size());
  for (const auto& e : g.edges()) out.push_back(e.endpoints);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LooseGraph

EdgeTag LooseGraph::next_tag() { return "e" + std::to_string(++tag_counter_); }

void LooseGraph::push_edge(Edge e) {
  for (const auto& existing : edges_)
    if (existing.tag == e.tag) throw GraphError("duplicate edge tag " + e.tag);
  edges_.push_back(std::move(e));
}

void LooseGraph::add_vertex(const VertexId& v) { vertices_.insert(v); }

EdgeTag LooseGraph::add_edge(const VertexId& u, const VertexId& v) {
  if (u == v) throw GraphError("loop edge at " + u);
  if (find_edge(u, v)) throw GraphError("duplicate edge " + u + " " + v);
  add_vertex(u);
  add_vertex(v);
  Edge e{next_tag(), {std::min(u, v), std::max(u, v)}};
  EdgeTag tag = e.tag;
  push_edge(std::move(e));
  return tag;
}

EdgeTag LooseGraph::add_loose(const VertexId& v) {
  add_vertex(v);
  Edge e{next_tag(), {v}};
  EdgeTag tag = e.tag;
  push_edge(std::move(e));
  return tag;
}

EdgeTag LooseGraph::add_free_loose() {
  Edge e{next_tag(), {}};
  EdgeTag tag = e.tag;
  push_edge(std::move(e));
  return tag;
}

void LooseGraph::remove_edge(const EdgeTag& tag) {
  auto it = std::find_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.tag == tag; });
  if (it == edges_.end()) throw GraphError("unknown edge " + tag);
  edges_.erase(it);
}

const Edge& LooseGraph::edge(const EdgeTag& tag) const {
  for (const auto& e : edges_)
    if (e.tag == tag) return e;
  throw GraphError("unknown edge " + tag);
}

std::optional<EdgeTag> LooseGraph::find_edge(const VertexId& u, const VertexId& v) const {
  for (const auto& e : edges_)
    if (e.is_full() && e.touches(u) && e.touches(v)) return e.tag;
  return std::nullopt;
}

std::size_t LooseGraph::degree(const VertexId& v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + v);
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [&](const Edge& e) { return e.touches(v); }));
}

std::size_t LooseGraph::max_degree() const {
  std::map<VertexId, std::size_t> deg;
  for (const auto& e : edges_)
    for (const auto& v : e.endpoints) ++deg[v];
  std::size_t best = 0;
  for (const auto& [v, d] : deg) best = std::max(best, d);
  return best;
}

std::vector<VertexId> LooseGraph::neighbors(const VertexId& v) const {
  if (!has_vertex(v)) throw GraphError("unknown vertex " + v);
  std::vector<VertexId> out;
  for (const auto& e : edges_)
    if (e.is_full() && e.touches(v)) out.push_back(e.endpoints[0] == v ? e.endpoints[1] : e.endpoints[0]);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t LooseGraph::full_edge_count() const {
  return static_cast<std::size_t>(std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.is_full(); }));
}

std::size_t LooseGraph::loose_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.kind() == EdgeKind::Loose; }));
}

std::size_t LooseGraph::free_edge_count() const {
  return static_cast<std::size_t>(
      std::count_if(edges_.begin(), edges_.end(), [](const Edge& e) { return e.kind() == EdgeKind::Free; }));
}

bool LooseGraph::is_connected() const {
  if (vertices_.empty()) return true;
  std::set<VertexId> seen{*vertices_.begin()};
  std::deque<VertexId> queue{*vertices_.begin()};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& w : neighbors(v))
      if (seen.insert(w).second) queue.push_back(w);
  }
  return seen.size() == vertices_.size();
}

bool operator==(const LooseGraph& a, const LooseGraph& b) {
  return a.vertices_ == b.vertices_ && sorted_endpoint_multiset(a) == sorted_endpoint_multiset(b);
}

// ---------------------------------------------------------------------------
// Text format

LooseGraph parse_graph(std::string_view text) {
  LooseGraph g;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string_view line = raw;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string& cmd = tok[0];
    auto want = [&](std::size_t n) {
      if (tok.size() != n + 1)
        throw ParseError(line_no, "'" + cmd + "' takes " + std::to_string(n) + " argument(s)");
      for (std::size_t i = 1; i < tok.size(); ++i)
        if (!valid_id(tok[i])) throw ParseError(line_no, "invalid vertex id '" + tok[i] + "'");
    };
    try {
      if (cmd == "vertex") {
        want(1);
        g.add_vertex(tok[1]);
      } else if (cmd == "edge") {
        want(2);
        g.add_edge(tok[1], tok[2]);
      } else if (cmd == "loose") {
        want(1);
        g.add_loose(tok[1]);
      } else if (cmd == "loose2") {
        want(0);
        g.add_free_loose();
      } else {
        throw ParseError(line_no, "unknown directive '" + cmd + "'");
      }
    } catch (const GraphError& e) {
      throw GraphError("line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return g;
}

std::string render_graph(const LooseGraph& g) {
  std::vector<std::string> edge_lines;
  for (const auto& e : g.edges()) {
    switch (e.kind()) {
      case EdgeKind::Full: edge_lines.push_back("edge " + e.endpoints[0] + " " + e.endpoints[1]); break;
      case EdgeKind::Loose: edge_lines.push_back("loose " + e.endpoints[0]); break;
      case EdgeKind::Free: edge_lines.emplace_back("loose2"); break;
    }
  }
  std::sort(edge_lines.begin(), edge_lines.end());
  std::string out;
  for (const auto& v : g.vertices()) out += "vertex " + v + "\n";
  for (const auto& l : edge_lines) out += l + "\n";
  return out;
}

// ---------------------------------------------------------------------------
// Structural operations

std::vector<std::set<std::size_t>> AmbientEmbedding::closed_neighborhoods() const {
  std::vector<std::set<std::size_t>> nbhd(vertices.size());
  for (std::size_t i = 0; i < vertices.size(); ++i) nbhd[i].insert(i);
  for (auto [a, b] : edges) {
    nbhd[a].insert(b);
    nbhd[b].insert(a);
  }
  return nbhd;
}

AmbientEmbedding ambient_completion(const LooseGraph& g) {
  AmbientEmbedding amb;
  std::map<VertexId, std::size_t> index;
  for (const auto& v : g.vertices()) {
    index[v] = amb.vertices.size();
    amb.vertices.push_back(v);
  }
  amb.original_count = amb.vertices.size();
  auto fresh = [&](const std::string& name) {
    amb.vertices.push_back(name);
    return amb.vertices.size() - 1;
  };
  for (const auto& e : g.edges()) {
    switch (e.kind()) {
      case EdgeKind::Full: amb.edges.emplace_back(index.at(e.endpoints[0]), index.at(e.endpoints[1])); break;
      case EdgeKind::Loose: amb.edges.emplace_back(index.at(e.endpoints[0]), fresh("@" + e.tag)); break;
      case EdgeKind::Free: {
        std::size_t a = fresh("@" + e.tag + ".0");
        std::size_t b = fresh("@" + e.tag + ".1");
        amb.edges.emplace_back(a, b);
        amb.free_edge_vertices.push_back(a);
        amb.free_edge_vertices.push_back(b);
        break;
      }
    }
  }
  return amb;
}

LooseGraph resolve_edge(const LooseGraph& g, const EdgeTag& tag) {
  const Edge& e = g.edge(tag);
  if (!e.is_full()) throw GraphError("edge " + tag + " is loose and cannot be resolved");
  const VertexId u = e.endpoints[0];
  const VertexId v = e.endpoints[1];
  LooseGraph out = g;
  out.remove_edge(tag);
  out.add_loose(u);
  out.add_loose(v);
  return out;
}

std::set<VertexId> ball(const LooseGraph& g, const VertexId& c, int radius) {
  if (!g.has_vertex(c)) throw GraphError("unknown vertex " + c);
  if (radius != 0 && radius != 1) throw GraphError("ball radius must be 0 or 1");
  std::set<VertexId> out{c};
  if (radius == 1)
    for (const auto& w : g.neighbors(c)) out.insert(w);
  return out;
}

LooseGraph restrict_to(const LooseGraph& g, const std::set<VertexId>& s) {
  for (const auto& v : s)
    if (!g.has_vertex(v)) throw GraphError("restriction to unknown vertex " + v);
  LooseGraph out;
  for (const auto& v : s) out.add_vertex(v);
  for (const auto& e : g.edges()) {
    std::vector<VertexId> inside;
    for (const auto& v : e.endpoints)
      if (s.count(v)) inside.push_back(v);
    if (inside.size() == 2)
      out.add_edge(inside[0], inside[1]);
    else if (inside.size() == 1)
      out.add_loose(inside[0]);
  }
  return out;
}

LooseGraph reduce(const LooseGraph& g) {
  LooseGraph out = g;
  for (const auto& e : g.edges())
    if (!e.is_full()) out.remove_edge(e.tag);
  return out;
}

std::set<EdgeTag> spanning_tree(const LooseGraph& g) {
  if (!g.is_connected()) throw GraphError("graph is not connected");
  std::set<EdgeTag> tree;
  if (g.vertices().empty()) return tree;
  const VertexId root = *g.vertices().begin();
  std::set<VertexId> seen{root};
  std::deque<VertexId> queue{root};
  while (!queue.empty()) {
    VertexId v = queue.front();
    queue.pop_front();
    for (const auto& w : g.neighbors(v)) {
      if (seen.insert(w).second) {
        tree.insert(*g.find_edge(v, w));
        queue.push_back(w);
      }
    }
  }
  return tree;
}

namespace {

// Union-find over vertex indices, used to test acyclicity of edge subsets.
struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
  }
  std::size_t find(std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<std::size_t> parent;
};

}  // namespace

std::vector<std::set<EdgeTag>> all_spanning_trees(const LooseGraph& g) {
  if (!g.is_connected()) throw GraphError("graph is not connected");
  std::map<VertexId, std::size_t> index;
  for (const auto& v : g.vertices()) index.emplace(v, index.size());
  std::vector<const Edge*> full;
  for (const auto& e : g.edges())
    if (e.is_full()) full.push_back(&e);
  const std::size_t need = g.vertices().empty() ? 0 : g.vertices().size() - 1;

  std::vector<std::set<EdgeTag>> out;
  std::vector<std::size_t> chosen;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (chosen.size() == need) {
      DisjointSets ds(index.size());
      for (std::size_t i : chosen)
        if (!ds.unite(index[full[i]->endpoints[0]], index[full[i]->endpoints[1]])) return;
      std::set<EdgeTag> tree;
      for (std::size_t i : chosen) tree.insert(full[i]->tag);
      out.push_back(std::move(tree));
      return;
    }
    for (std::size_t i = start; i < full.size(); ++i) {
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<std::vector<VertexId>> cliques(const LooseGraph& g) {
  const std::vector<VertexId> verts(g.vertices().begin(), g.vertices().end());
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < verts.size(); ++i) index[verts[i]] = i;
  std::vector<std::vector<bool>> adj(verts.size(), std::vector<bool>(verts.size(), false));
  for (const auto& e : g.edges()) {
    if (!e.is_full()) continue;
    std::size_t a = index[e.endpoints[0]], b = index[e.endpoints[1]];
    adj[a][b] = adj[b][a] = true;
  }
  std::vector<std::vector<VertexId>> out;
  std::vector<std::size_t> current;
  // Extend only by larger indices adjacent to everything chosen so far.
  std::function<void(std::size_t)> grow = [&](std::size_t start) {
    for (std::size_t i = start; i < verts.size(); ++i) {
      bool ok = std::all_of(current.begin(), current.end(), [&](std::size_t c) { return adj[c][i]; });
      if (!ok) continue;
      current.push_back(i);
      std::vector<VertexId> clique;
      for (std::size_t c : current) clique.push_back(verts[c]);
      out.push_back(std::move(clique));
      grow(i + 1);
      current.pop_back();
    }
  };
  grow(0);
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return out;
}

bool is_loose_tree(const LooseGraph& g) {
  if (!g.is_connected()) return false;
  if (g.vertices().empty()) return false;
  return g.full_edge_count() + 1 == g.vertices().size();
}

TreeStats tree_stats(const LooseGraph& g) {
  if (!is_loose_tree(g)) throw GraphError("graph is not a loose tree");
  std::map<std::size_t, std::size_t> by_degree;
  TreeStats stats;
  for (const auto& v : g.vertices()) {
    std::size_t d = g.degree(v);
    if (d == 0)
      ++stats.isolated;
    else if (d == 1)
      ++stats.ends;
    else
      ++by_degree[d];
  }
  long long internal_vertices = 0;
  for (const auto& [d, n] : by_degree) {
    stats.degrees.push_back(d);
    stats.counts.push_back(n);
    internal_vertices += static_cast<long long>(n);
  }
  stats.internal = internal_vertices - 1;
  stats.free_edges = g.free_edge_count();
  return stats;
}

std::vector<LooseGraph> components(const LooseGraph& g) {
  std::vector<LooseGraph> out;
  std::set<VertexId> unseen = g.vertices();
  while (!unseen.empty()) {
    VertexId root = *unseen.begin();
    std::set<VertexId> comp{root};
    std::deque<VertexId> queue{root};
    while (!queue.empty()) {
      VertexId v = queue.front();
      queue.pop_front();
      for (const auto& w : g.neighbors(v))
        if (comp.insert(w).second) queue.push_back(w);
    }
    for (const auto& v : comp) unseen.erase(v);
    // Within a component restriction keeps every incident edge intact.
    out.push_back(restrict_to(g, comp));
  }
  for (std::size_t i = 0; i < g.free_edge_count(); ++i) {
    LooseGraph free;
    free.add_free_loose();
    out.push_back(std::move(free));
  }
  return out;
}

LooseGraph disjoint_union(const LooseGraph& a, const LooseGraph& b) {
  std::string prefix = "b_";
  auto clashes = [&] {
    return std::any_of(b.vertices().begin(), b.vertices().end(),
                       [&](const VertexId& v) { return a.has_vertex(prefix + v); });
  };
  while (clashes()) prefix += "_";
  LooseGraph out = a;
  for (const auto& v : b.vertices()) out.add_vertex(prefix + v);
  for (const auto& e : b.edges()) {
    switch (e.kind()) {
      case EdgeKind::Full: out.add_edge(prefix + e.endpoints[0], prefix + e.endpoints[1]); break;
      case EdgeKind::Loose: out.add_loose(prefix + e.endpoints[0]); break;
      case EdgeKind::Free: out.add_free_loose(); break;
    }
  }
  return out;
}

}  // namespace f1
