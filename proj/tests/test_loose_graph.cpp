#include "f1/corpus.hpp"
#include "f1/loose_graph.hpp"

#include "doctest.h"

using namespace f1;

namespace {

std::set<VertexId> vs(std::initializer_list<const char*> ids) {
  std::set<VertexId> out;
  for (const char* s : ids) out.insert(s);
  return out;
}

}  // namespace

TEST_CASE("parse: triangle, free loose edge, comments") {
  const LooseGraph t = parse_graph("edge a b\nedge b c # closing\nedge a c\n");
  CHECK_FALSE(t == corpus::cycle(3));  // different vertex names
  CHECK(t.vertices() == vs({"a", "b", "c"}));
  CHECK(t.full_edge_count() == 3);
  CHECK(t.edges()[0].tag == "e1");
  CHECK(t.edges()[2].tag == "e3");

  const LooseGraph gm = parse_graph("loose2");
  CHECK(gm.vertices().empty());
  CHECK(gm.free_edge_count() == 1);

  const LooseGraph star = parse_graph("vertex c\n\n  loose c\nloose c\n");
  CHECK(star.degree("c") == 2);
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_graph("edge a a"), GraphError);
  CHECK_THROWS_AS(parse_graph("edge a b\nedge b a"), GraphError);
  try {
    parse_graph("edge a b\nedge a\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(parse_graph("vertex a-b"), ParseError);
  CHECK_THROWS_AS(parse_graph("node a"), ParseError);
  CHECK_THROWS_AS(parse_graph("loose2 x"), ParseError);
}

TEST_CASE("render/parse round trip on random loose graphs") {
  corpus::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    const LooseGraph g = corpus::random_loose_graph(rng, 7);
    CHECK(parse_graph(render_graph(g)) == g);
  }
  CHECK(render_graph(parse_graph("loose2\nedge b a\nloose a")) == "vertex a\nvertex b\nedge a b\nloose a\nloose2\n");
}

TEST_CASE("ambient completion") {
  const AmbientEmbedding star = ambient_completion(corpus::affine_star(3));
  CHECK(star.size() == 4);
  CHECK(star.original_count == 1);
  const auto nb = star.closed_neighborhoods();
  CHECK(nb[0].size() == 4);
  for (std::size_t i = 1; i < 4; ++i) CHECK(nb[i].size() == 2);

  const AmbientEmbedding k4 = ambient_completion(corpus::complete_graph(4));
  CHECK(k4.size() == 4);
  CHECK(k4.edges.size() == 6);

  const AmbientEmbedding gm = ambient_completion(corpus::free_loose_edge());
  CHECK(gm.size() == 2);
  CHECK(gm.edges.size() == 1);
  CHECK(gm.free_edge_vertices.size() == 2);
}

TEST_CASE("ambient completion adds one vertex per loose edge and two per free edge") {
  corpus::Rng rng(8);
  for (int i = 0; i < 100; ++i) {
    const LooseGraph g = corpus::random_loose_graph(rng, 7);
    const AmbientEmbedding a = ambient_completion(g);
    CHECK(a.size() == g.vertices().size() + g.loose_edge_count() + 2 * g.free_edge_count());
    const auto nb = a.closed_neighborhoods();
    for (std::size_t v = a.original_count; v < a.size(); ++v) CHECK(nb[v].size() == 2);
  }
}

TEST_CASE("resolve_edge") {
  const LooseGraph g = corpus::gamma_uv(2);
  const LooseGraph r = resolve_edge(g, *g.find_edge("u", "v"));
  CHECK(r.degree("u") == 3);
  CHECK(r.degree("v") == 3);
  CHECK(r.neighbors("u") == std::vector<VertexId>{"v1", "v2"});
  CHECK(r.loose_edge_count() == 2);

  const LooseGraph k2 = corpus::complete_graph(2);
  const LooseGraph k2r = resolve_edge(k2, k2.edges()[0].tag);
  CHECK(k2r.full_edge_count() == 0);
  CHECK(k2r.degree("v0") == 1);
  CHECK(k2r.degree("v1") == 1);

  const LooseGraph a = corpus::affine_star(1);
  CHECK_THROWS_AS(resolve_edge(a, a.edges()[0].tag), GraphError);
  CHECK_THROWS_AS(resolve_edge(k2, "nope"), GraphError);
}

TEST_CASE("resolution preserves degrees and edge count") {
  corpus::Rng rng(9);
  for (int i = 0; i < 100; ++i) {
    const LooseGraph g = corpus::random_loose_graph(rng, 7);
    for (const auto& e : g.edges()) {
      if (!e.is_full()) continue;
      const LooseGraph r = resolve_edge(g, e.tag);
      CHECK(r.edges().size() == g.edges().size() + 1);
      CHECK(r.full_edge_count() + 1 == g.full_edge_count());
      for (const auto& v : g.vertices()) CHECK(r.degree(v) == g.degree(v));
    }
  }
}

TEST_CASE("balls") {
  CHECK(ball(corpus::complete_graph(3), "v1", 1) == vs({"v0", "v1", "v2"}));
  CHECK(ball(corpus::path(3), "v0", 1) == vs({"v0", "v1"}));
  CHECK(ball(corpus::path(3), "v0", 0) == vs({"v0"}));
  CHECK(ball(corpus::gamma_uv(2), "u", 1) == vs({"u", "v", "v1", "v2"}));
  CHECK_THROWS_AS(ball(corpus::path(3), "zz", 1), GraphError);
}

TEST_CASE("restriction preserves degrees") {
  const LooseGraph k3 = corpus::complete_graph(3);
  const LooseGraph r = restrict_to(k3, vs({"v0", "v1"}));
  CHECK(r.full_edge_count() == 1);
  CHECK(r.loose_edge_count() == 2);
  CHECK(r.degree("v0") == 2);
  CHECK(restrict_to(k3, k3.vertices()) == k3);

  const LooseGraph centre = restrict_to(corpus::star(3), vs({"c"}));
  CHECK(centre.vertices() == vs({"c"}));
  CHECK(centre.loose_edge_count() == 3);
  CHECK(restrict_to(k3, {}).vertices().empty());

  corpus::Rng rng(10);
  for (int i = 0; i < 100; ++i) {
    const LooseGraph g = corpus::random_loose_graph(rng, 7);
    CHECK(reduce(restrict_to(g, g.vertices())) == reduce(g));
    for (const auto& v : g.vertices()) CHECK(restrict_to(g, ball(g, v, 1)).degree(v) == g.degree(v));
  }
}

TEST_CASE("reduce") {
  const LooseGraph a = reduce(corpus::affine_star(4));
  CHECK(a.vertices() == vs({"c"}));
  CHECK(a.edges().empty());
  const LooseGraph g = corpus::gamma_uv(2);
  const LooseGraph c4 = reduce(resolve_edge(g, *g.find_edge("u", "v")));
  CHECK(c4 == parse_graph("edge u v1\nedge v1 v\nedge v v2\nedge v2 u"));
  CHECK(reduce(corpus::complete_graph(4)) == corpus::complete_graph(4));
}

TEST_CASE("spanning trees") {
  const LooseGraph k3 = corpus::complete_graph(3);
  CHECK(spanning_tree(k3).size() == 2);
  const LooseGraph p = corpus::path(5);
  CHECK(spanning_tree(p).size() == 4);
  // BFS from v0 in K4 takes the star at v0.
  const LooseGraph k4 = corpus::complete_graph(4);
  std::set<EdgeTag> expected{*k4.find_edge("v0", "v1"), *k4.find_edge("v0", "v2"), *k4.find_edge("v0", "v3")};
  CHECK(spanning_tree(k4) == expected);
  CHECK_THROWS_AS(spanning_tree(parse_graph("vertex a\nvertex b")), GraphError);
  CHECK(all_spanning_trees(k4).size() == 16);  // Cayley
  CHECK(all_spanning_trees(corpus::cycle(5)).size() == 5);
}

TEST_CASE("cliques") {
  const auto t = cliques(corpus::complete_graph(3));
  CHECK(t.size() == 7);
  CHECK(t.front() == std::vector<VertexId>{"v0"});
  CHECK(t.back() == std::vector<VertexId>{"v0", "v1", "v2"});
  const auto p = cliques(corpus::path(3));
  CHECK(p == std::vector<std::vector<VertexId>>{{"v0"}, {"v1"}, {"v2"}, {"v0", "v1"}, {"v1", "v2"}});
  CHECK(cliques(corpus::free_loose_edge()).empty());
  CHECK(cliques(corpus::complete_graph(6)).size() == 63);
}

TEST_CASE("tree statistics") {
  const TreeStats p = tree_stats(corpus::path(3));
  CHECK(p.degrees == std::vector<std::size_t>{2});
  CHECK(p.counts == std::vector<std::size_t>{1});
  CHECK(p.internal == 0);
  CHECK(p.ends == 2);

  const TreeStats k2 = tree_stats(corpus::complete_graph(2));
  CHECK(k2.degrees.empty());
  CHECK(k2.internal == -1);
  CHECK(k2.ends == 2);

  const TreeStats a = tree_stats(corpus::affine_star(5));
  CHECK(a.degrees == std::vector<std::size_t>{5});
  CHECK(a.internal == 0);
  CHECK(a.ends == 0);

  CHECK_THROWS_AS(tree_stats(corpus::complete_graph(3)), GraphError);

  corpus::Rng rng(3);
  for (int i = 0; i < 50; ++i) {
    const LooseGraph t = corpus::random_loose_tree(rng, 1 + i % 8, 3);
    const TreeStats s = tree_stats(t);
    std::size_t internal = 0;
    for (auto n : s.counts) internal += n;
    CHECK(internal + static_cast<std::size_t>(s.ends) + s.isolated == t.vertices().size());
  }
}

TEST_CASE("components and disjoint union") {
  const LooseGraph g = parse_graph("edge a b\nloose b\nedge c d\nvertex e\nloose2");
  const auto parts = components(g);
  CHECK(parts.size() == 4);
  CHECK(parts[0].vertices() == vs({"a", "b"}));
  CHECK(parts[0].loose_edge_count() == 1);
  CHECK(parts[3].free_edge_count() == 1);
  const LooseGraph u = disjoint_union(corpus::complete_graph(2), corpus::complete_graph(2));
  CHECK(u.vertices().size() == 4);
  CHECK(components(u).size() == 2);
}

TEST_CASE("tree enumeration matches the known counts") {
  const std::size_t expected[] = {0, 1, 1, 1, 2, 3, 6, 11, 23};
  for (std::size_t n = 1; n <= 8; ++n) CHECK(corpus::nonisomorphic_trees(n).size() == expected[n]);
}
