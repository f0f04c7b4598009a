#include "f1/grothendieck.hpp"

#include <algorithm>
#include <map>

namespace f1 {

namespace {

const LPolynomial& L() {
  static const LPolynomial l = LPolynomial::variable();
  return l;
}

LPolynomial gm_power(std::size_t k) { return (L() - LPolynomial(1)).pow(static_cast<unsigned>(k)); }

}  // namespace

LPolynomial class_of(const LooseGraph& g) {
  const AmbientEmbedding amb = ambient_completion(g);
  const auto nbhd = amb.closed_neighborhoods();
  std::map<VertexId, std::size_t> index;
  for (std::size_t i = 0; i < amb.original_count; ++i) index[amb.vertices[i]] = i;

  // Term exponents only; the polynomial is assembled once per (t, s) pair.
  std::map<std::pair<std::size_t, std::size_t>, Integer> weight;
  for (const auto& clique : cliques(g)) {
    std::set<std::size_t> common = nbhd[index[clique.front()]];
    for (std::size_t i = 1; i < clique.size(); ++i) {
      const auto& other = nbhd[index[clique[i]]];
      std::set<std::size_t> next;
      std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                            std::inserter(next, next.end()));
      common = std::move(next);
    }
    const std::size_t t = clique.size();
    weight[{t, common.size()}] += (t % 2 == 1) ? 1 : -1;
  }

  LPolynomial total;
  for (const auto& [key, w] : weight) {
    const auto [t, s] = key;
    total += LPolynomial(w) * gm_power(t - 1) * L().pow(static_cast<unsigned>(s - t));
  }
  total += LPolynomial(static_cast<int>(g.free_edge_count())) * gm_power(1);
  return total;
}

LPolynomial tree_class(const LooseGraph& g) {
  const LPolynomial free_part = LPolynomial(static_cast<int>(g.free_edge_count())) * gm_power(1);
  if (g.vertices().empty()) return free_part;
  const TreeStats st = tree_stats(g);
  if (g.vertices().size() == 1 && st.isolated == 1) return LPolynomial(1) + free_part;

  LPolynomial p;
  for (std::size_t i = 0; i < st.degrees.size(); ++i)
    p += LPolynomial::monomial(Integer(st.counts[i]), static_cast<unsigned>(st.degrees[i]));
  const Integer internal(st.internal);
  p -= LPolynomial(internal) * L();
  p += LPolynomial(internal + st.ends);
  return p + free_part;
}

LPolynomial affection_difference(const LooseGraph& g, const EdgeTag& e) {
  const Edge& edge = g.edge(e);
  if (!edge.is_full()) throw GraphError("edge " + e + " is loose and cannot be resolved");
  std::set<VertexId> b = ball(g, edge.endpoints[0], 1);
  b.merge(ball(g, edge.endpoints[1], 1));
  return class_of(restrict_to(g, b)) - class_of(restrict_to(resolve_edge(g, e), b));
}

SurgeryResult surgery(const LooseGraph& g) {
  const std::set<EdgeTag> tree = spanning_tree(g);
  std::vector<const Edge*> rest;
  for (const auto& e : g.edges())
    if (e.is_full() && !tree.count(e.tag)) rest.push_back(&e);
  std::sort(rest.begin(), rest.end(), [](const Edge* a, const Edge* b) { return a->endpoints < b->endpoints; });
  std::vector<EdgeTag> order;
  for (const Edge* e : rest) order.push_back(e->tag);
  return surgery(g, tree, order);
}

SurgeryResult surgery(const LooseGraph& g, const std::set<EdgeTag>& tree, const std::vector<EdgeTag>& order) {
  if (!g.is_connected()) throw GraphError("surgery needs a connected graph; split into components first");

  std::set<EdgeTag> expected;
  for (const auto& e : g.edges())
    if (e.is_full() && !tree.count(e.tag)) expected.insert(e.tag);
  for (const auto& t : tree)
    if (!g.edge(t).is_full()) throw GraphError("spanning tree contains loose edge " + t);
  if (std::set<EdgeTag>(order.begin(), order.end()) != expected || order.size() != expected.size())
    throw GraphError("resolution order must list every non-tree full edge once");

  SurgeryResult result;
  result.trace.spanning_tree = tree;
  result.trace.order = order;

  LooseGraph current = g;
  LPolynomial differences;
  for (const auto& tag : order) {
    const Edge& edge = current.edge(tag);
    std::set<VertexId> b = ball(current, edge.endpoints[0], 1);
    b.merge(ball(current, edge.endpoints[1], 1));
    LPolynomial diff = affection_difference(current, tag);
    differences += diff;
    result.trace.steps.push_back({tag, std::move(b), std::move(diff)});
    current = resolve_edge(current, tag);
  }
  if (!is_loose_tree(current) && !current.vertices().empty())
    throw GraphError("edge set outside the given tree does not leave a spanning tree");

  result.trace.tree_polynomial = tree_class(current);
  if (!current.vertices().empty()) result.trace.final_stats = tree_stats(current);
  result.polynomial = result.trace.tree_polynomial + differences;
  return result;
}

LPolynomial surgery_by_components(const LooseGraph& g) {
  LPolynomial total;
  for (const auto& c : components(g)) total += surgery(c).polynomial;
  return total;
}

}  // namespace f1
