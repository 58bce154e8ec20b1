#pragma once

#include <map>
#include <random>
#include <set>
#include <vector>

#include "skewlines/clique.hpp"
#include "skewlines/surface.hpp"

namespace testing {

inline const skewlines::Surface& surface(int q) {
  static std::map<int, skewlines::Surface> cache;
  auto it = cache.find(q);
  if (it == cache.end()) {
    auto [p, e] = skewlines::prime_power(q);
    it = cache.emplace(q, skewlines::Surface::build(skewlines::FieldSpec::build(p, e))).first;
  }
  return it->second;
}

inline skewlines::SkewGraph random_graph(int n, double density, std::mt19937& rng) {
  skewlines::SkewGraph g(n);
  std::bernoulli_distribution coin(density);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (coin(rng)) g.add_edge(u, v);
  return g;
}

// Exhaustive oracle: every vertex subset that is a clique and admits no
// extension.
inline std::set<std::vector<int>> brute_maximal_cliques(const skewlines::SkewGraph& g) {
  const int n = g.size();
  std::set<std::vector<int>> out;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> vs;
    for (int v = 0; v < n; ++v)
      if (mask >> v & 1u) vs.push_back(v);
    bool clique = true;
    for (std::size_t i = 0; i < vs.size() && clique; ++i)
      for (std::size_t j = i + 1; j < vs.size() && clique; ++j) clique = g.adjacent(vs[i], vs[j]);
    if (!clique) continue;
    bool maximal = true;
    for (int w = 0; w < n && maximal; ++w) {
      if (mask >> w & 1u) continue;
      bool all = true;
      for (int v : vs) all = all && g.adjacent(v, w);
      if (all) maximal = false;
    }
    if (maximal) out.insert(vs);
  }
  return out;
}

inline std::set<std::vector<int>> collect_pivot(const skewlines::SkewGraph& g) {
  std::set<std::vector<int>> out;
  const int n = g.size();
  skewlines::bk_pivot(g, skewlines::VertexSet(n), skewlines::VertexSet::full(n),
                      skewlines::VertexSet(n), [&](std::span<const int> c) {
                        out.emplace(c.begin(), c.end());
                      });
  return out;
}

}  // namespace testing
