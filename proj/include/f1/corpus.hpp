#pragma once

// Named loose graphs and generators for verification corpora.

#include "f1/loose_graph.hpp"

#include <cstdint>
#include <random>
#include <string>
#include <vector>

namespace f1::corpus {

using Rng = std::mt19937_64;

struct NamedGraph {
  std::string name;
  LooseGraph graph;
};

/// K_n on vertices v0..v{n-1}.
LooseGraph complete_graph(std::size_t n);
/// One vertex with m loose edges: the affine space A^m.
LooseGraph affine_star(std::size_t m);
/// u ~ v plus m common neighbours v1..vm of u and v.
LooseGraph gamma_uv(std::size_t m);
LooseGraph path(std::size_t n);
LooseGraph cycle(std::size_t n);
/// Vertex `c` joined to n leaves.
LooseGraph star(std::size_t n);
LooseGraph free_loose_edge();

/// Every labelled loose graph whose ambient completion has at most
/// `max_ambient` vertices (free loose edges counted with both endpoints).
std::vector<NamedGraph> all_loose_graphs(std::size_t max_ambient);

/// Random loose graph with ambient size <= max_ambient.
LooseGraph random_loose_graph(Rng& rng, std::size_t max_ambient);
/// Random connected graph on n vertices with `extra` edges beyond a tree.
LooseGraph random_connected_graph(Rng& rng, std::size_t n, std::size_t extra);
/// Random labelled tree on n vertices plus up to max_loose loose edges.
LooseGraph random_loose_tree(Rng& rng, std::size_t n, std::size_t max_loose);

/// One representative per isomorphism class of trees on n vertices.
std::vector<LooseGraph> nonisomorphic_trees(std::size_t n);

/// Reference graphs with known classes plus small classics.
std::vector<NamedGraph> reference_graphs();

/// The verification corpus: every loose graph with ambient size <= 5 and
/// `random_count` random graphs with ambient size <= 7.
std::vector<NamedGraph> verification_corpus(std::uint64_t seed, std::size_t random_count = 200,
                                            std::size_t exhaustive_ambient = 5, std::size_t random_ambient = 7);

}  // namespace f1::corpus
