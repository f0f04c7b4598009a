#include "f1/corpus.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace f1::corpus {

namespace {

std::string vname(std::size_t i) { return "v" + std::to_string(i); }

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

using Adjacency = std::vector<std::vector<std::size_t>>;

std::string rooted_code(const Adjacency& adj, std::size_t v, std::size_t parent) {
  std::vector<std::string> kids;
  for (std::size_t w : adj[v])
    if (w != parent) kids.push_back(rooted_code(adj, w, v));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  return out + ")";
}

// Canonical string of an unrooted tree: rooted code at the center, minimised
// over the (at most two) centers.
std::string tree_code(const Adjacency& adj) {
  const std::size_t n = adj.size();
  if (n <= 2) return std::to_string(n);
  std::vector<std::size_t> deg(n);
  std::vector<std::size_t> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = adj[v].size();
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<std::size_t> next;
    for (std::size_t v : layer)
      for (std::size_t w : adj[v])
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::string best;
  for (std::size_t c : layer) {
    std::string code = rooted_code(adj, c, SIZE_MAX);
    if (best.empty() || code < best) best = code;
  }
  return best;
}

LooseGraph from_adjacency(const Adjacency& adj) {
  LooseGraph g;
  for (std::size_t v = 0; v < adj.size(); ++v) g.add_vertex(vname(v));
  for (std::size_t v = 0; v < adj.size(); ++v)
    for (std::size_t w : adj[v])
      if (v < w) g.add_edge(vname(v), vname(w));
  return g;
}

}  // namespace

LooseGraph complete_graph(std::size_t n) {
  LooseGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(vname(i));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(vname(i), vname(j));
  return g;
}

LooseGraph affine_star(std::size_t m) {
  LooseGraph g;
  g.add_vertex("c");
  for (std::size_t i = 0; i < m; ++i) g.add_loose("c");
  return g;
}

LooseGraph gamma_uv(std::size_t m) {
  LooseGraph g;
  g.add_edge("u", "v");
  for (std::size_t i = 1; i <= m; ++i) {
    g.add_edge("u", "v" + std::to_string(i));
    g.add_edge("v", "v" + std::to_string(i));
  }
  return g;
}

LooseGraph path(std::size_t n) {
  LooseGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(vname(i));
  for (std::size_t i = 1; i < n; ++i) g.add_edge(vname(i - 1), vname(i));
  return g;
}

LooseGraph cycle(std::size_t n) {
  LooseGraph g = path(n);
  if (n >= 3) g.add_edge(vname(n - 1), vname(0));
  return g;
}

LooseGraph star(std::size_t n) {
  LooseGraph g;
  g.add_vertex("c");
  for (std::size_t i = 0; i < n; ++i) g.add_edge("c", vname(i));
  return g;
}

LooseGraph free_loose_edge() {
  LooseGraph g;
  g.add_free_loose();
  return g;
}

std::vector<NamedGraph> all_loose_graphs(std::size_t max_ambient) {
  std::vector<NamedGraph> out;
  for (std::size_t n = 0; n <= max_ambient; ++n) {
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    const std::size_t budget = max_ambient - n;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs.size()); ++mask) {
      for (std::size_t free = 0; 2 * free <= budget; ++free) {
        // Distribute up to budget - 2*free loose edges over the n vertices.
        std::vector<std::size_t> loose(n, 0);
        std::function<void(std::size_t, std::size_t)> rec = [&](std::size_t v, std::size_t left) {
          if (v == n) {
            LooseGraph g;
            std::string name = "n" + std::to_string(n) + "-m" + std::to_string(mask);
            for (std::size_t i = 0; i < n; ++i) g.add_vertex(vname(i));
            for (std::size_t k = 0; k < pairs.size(); ++k)
              if (mask >> k & 1U) g.add_edge(vname(pairs[k].first), vname(pairs[k].second));
            for (std::size_t i = 0; i < n; ++i) {
              for (std::size_t c = 0; c < loose[i]; ++c) g.add_loose(vname(i));
              if (loose[i]) name += "-l" + std::to_string(i) + "x" + std::to_string(loose[i]);
            }
            for (std::size_t f = 0; f < free; ++f) g.add_free_loose();
            if (free) name += "-f" + std::to_string(free);
            out.push_back({std::move(name), std::move(g)});
            return;
          }
          for (std::size_t c = 0; c <= left; ++c) {
            loose[v] = c;
            rec(v + 1, left - c);
          }
          loose[v] = 0;
        };
        rec(0, budget - 2 * free);
      }
    }
  }
  return out;
}

LooseGraph random_loose_graph(Rng& rng, std::size_t max_ambient) {
  const std::size_t n = uniform(rng, 1, max_ambient);
  LooseGraph g;
  for (std::size_t i = 0; i < n; ++i) g.add_vertex(vname(i));
  std::bernoulli_distribution coin(0.5);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(vname(i), vname(j));
  std::size_t budget = max_ambient - n;
  if (budget >= 2 && std::bernoulli_distribution(0.15)(rng)) {
    g.add_free_loose();
    budget -= 2;
  }
  const std::size_t loose = uniform(rng, 0, budget);
  for (std::size_t k = 0; k < loose; ++k) g.add_loose(vname(uniform(rng, 0, n - 1)));
  return g;
}

LooseGraph random_connected_graph(Rng& rng, std::size_t n, std::size_t extra) {
  LooseGraph g;
  g.add_vertex(vname(0));
  for (std::size_t i = 1; i < n; ++i) g.add_edge(vname(uniform(rng, 0, i - 1)), vname(i));
  std::vector<std::pair<std::size_t, std::size_t>> missing;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (!g.find_edge(vname(i), vname(j))) missing.emplace_back(i, j);
  std::shuffle(missing.begin(), missing.end(), rng);
  for (std::size_t k = 0; k < std::min(extra, missing.size()); ++k)
    g.add_edge(vname(missing[k].first), vname(missing[k].second));
  return g;
}

LooseGraph random_loose_tree(Rng& rng, std::size_t n, std::size_t max_loose) {
  LooseGraph g = random_connected_graph(rng, n, 0);
  const std::size_t loose = uniform(rng, 0, max_loose);
  for (std::size_t k = 0; k < loose; ++k) g.add_loose(vname(uniform(rng, 0, n - 1)));
  return g;
}

std::vector<LooseGraph> nonisomorphic_trees(std::size_t n) {
  if (n == 0) return {};
  std::vector<Adjacency> level{Adjacency(1)};
  for (std::size_t size = 2; size <= n; ++size) {
    std::map<std::string, Adjacency> seen;
    for (const auto& t : level) {
      for (std::size_t v = 0; v < t.size(); ++v) {
        Adjacency grown = t;
        grown.emplace_back();
        grown[v].push_back(size - 1);
        grown[size - 1].push_back(v);
        seen.try_emplace(tree_code(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, adj] : seen) level.push_back(std::move(adj));
  }
  std::vector<LooseGraph> out;
  for (const auto& adj : level) out.push_back(from_adjacency(adj));
  return out;
}

std::vector<NamedGraph> reference_graphs() {
  std::vector<NamedGraph> out;
  for (std::size_t n = 1; n <= 5; ++n) out.push_back({"K" + std::to_string(n), complete_graph(n)});
  for (std::size_t m = 0; m <= 4; ++m) out.push_back({"A" + std::to_string(m), affine_star(m)});
  LooseGraph g = gamma_uv(2);
  out.push_back({"Gamma(u,v;2)", g});
  out.push_back({"Gamma(u,v;2)_uv", resolve_edge(g, *g.find_edge("u", "v"))});
  out.push_back({"path3", path(3)});
  out.push_back({"cycle4", cycle(4)});
  out.push_back({"cycle5", cycle(5)});
  out.push_back({"star3", star(3)});
  out.push_back({"Gm", free_loose_edge()});
  LooseGraph k2 = complete_graph(2);
  out.push_back({"K2_resolved", resolve_edge(k2, k2.edges().front().tag)});
  return out;
}

std::vector<NamedGraph> verification_corpus(std::uint64_t seed, std::size_t random_count,
                                            std::size_t exhaustive_ambient, std::size_t random_ambient) {
  std::vector<NamedGraph> out = all_loose_graphs(exhaustive_ambient);
  Rng rng(seed);
  for (std::size_t i = 0; i < random_count; ++i)
    out.push_back({"random" + std::to_string(i), random_loose_graph(rng, random_ambient)});
  return out;
}

}  // namespace f1::corpus
