#pragma once

// Classes of loose graphs in the subring Z[L] of the Grothendieck ring of
// F1-schemes, computed three ways: clique inclusion-exclusion over the
// vertex cones, the closed formula for loose trees, and surgery (resolving
// non-tree edges one at a time while recording local differences).

#include "f1/loose_graph.hpp"
#include "f1/polynomial.hpp"

#include <set>
#include <vector>

namespace f1 {

/// Inclusion-exclusion over the nonempty cliques T of the full-edge graph:
///
///   sum_T (-1)^{|T|+1} (L-1)^{|T|-1} L^{|S(T)|-|T|},
///
/// where S(T) is the common closed neighborhood of T in the ambient graph,
/// plus (L-1) for each free loose edge.
LPolynomial class_of(const LooseGraph& g);

/// sum_i n_i L^{d_i} - I L + I + E for a loose tree. A lone vertex without
/// edges is 1, the empty graph 0, and free loose edges add (L-1) each.
LPolynomial tree_class(const LooseGraph& g);

/// Local difference P(g|B) - P(g_e|B) with B = B(x,1) u B(y,1) for e = xy.
LPolynomial affection_difference(const LooseGraph& g, const EdgeTag& e);

/// Evaluation at L = q; for a prime power q this is the number of F_q-points.
inline Integer eval(const LPolynomial& p, const Integer& q) { return p.eval(q); }

struct SurgeryStep {
  EdgeTag edge;
  std::set<VertexId> ball;
  LPolynomial difference;
};

struct SurgeryTrace {
  std::set<EdgeTag> spanning_tree;
  std::vector<EdgeTag> order;
  std::vector<SurgeryStep> steps;
  TreeStats final_stats;
  LPolynomial tree_polynomial;
};

struct SurgeryResult {
  LPolynomial polynomial;
  SurgeryTrace trace;
};

/// Surgery with the deterministic spanning tree and the non-tree edges
/// resolved in order of their sorted endpoint pairs. Throws GraphError on a
/// disconnected reduced graph.
SurgeryResult surgery(const LooseGraph& g);

/// Surgery with a caller-chosen spanning tree and resolution order; `order`
/// must list every full edge outside `tree` exactly once.
SurgeryResult surgery(const LooseGraph& g, const std::set<EdgeTag>& tree, const std::vector<EdgeTag>& order);

/// Sum of surgery over the connected components.
LPolynomial surgery_by_components(const LooseGraph& g);

}  // namespace f1
