#pragma once

// Random instance generators shared by the property tests and the
// acceptance suite.

#include <algorithm>
#include <numeric>
#include <random>

#include "mcg/graph.hpp"
#include "mcg/matching.hpp"

namespace gen {

inline mcg::Graph relabel_randomly(const mcg::Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

/// Connected graph of even order 2..max_n with exactly one perfect matching.
/// Starts from a perfect matching and adds random edges that create no
/// second matching; components are then joined by edges that are bridges.
inline mcg::Graph unique_pm_graph(int max_n, std::mt19937_64& rng) {
  const int n = 2 * (1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n / 2)));
  std::vector<mcg::Edge> edges;
  for (int i = 0; i < n; i += 2) edges.push_back({i, i + 1});
  std::vector<std::pair<int, int>> candidates;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (!(i % 2 == 0 && j == i + 1)) candidates.emplace_back(i, j);
  std::shuffle(candidates.begin(), candidates.end(), rng);
  const double keep = std::uniform_real_distribution<double>(0.2, 1.0)(rng);
  std::bernoulli_distribution coin(keep);
  for (auto [u, v] : candidates) {
    if (!coin(rng)) continue;
    mcg::Graph g(n, edges);
    // Adding u-v creates a new perfect matching iff g - u - v has one.
    if (mcg::has_perfect_matching_within(g, g.vertex_set() & ~mcg::vertex_bit(u) & ~mcg::vertex_bit(v))) continue;
    edges.push_back({u, v});
  }
  for (auto [u, v] : candidates) {
    mcg::Graph g(n, edges);
    if (mcg::is_connected(g)) break;
    // An edge between two components lies in no perfect matching.
    mcg::VertexMask seen = mcg::vertex_bit(u);
    for (mcg::VertexMask frontier = seen; frontier;) {
      mcg::VertexMask next = 0;
      for (mcg::VertexMask m = frontier; m; m &= m - 1) next |= g.neighbors(std::countr_zero(m));
      frontier = next & ~seen;
      seen |= next;
    }
    if (!(seen & mcg::vertex_bit(v))) edges.push_back({u, v});
  }
  return relabel_randomly(mcg::Graph(n, edges), rng);
}

inline mcg::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<mcg::Edge> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (coin(rng)) edges.push_back({i, j});
  return mcg::Graph(n, edges);
}

inline mcg::Graph random_bipartite(int half, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<mcg::Edge> edges;
  for (int i = 0; i < half; ++i)
    for (int j = 0; j < half; ++j)
      if (coin(rng)) edges.push_back({i, half + j});
  return mcg::Graph(2 * half, edges);
}

/// Splice of a at vertex x and b at vertex y, which must have equal
/// degree: both are deleted and their neighbourhoods joined by a random
/// bijection. Splicing matching covered graphs yields a matching covered
/// graph with a nontrivial tight cut.
inline mcg::Graph splice(const mcg::Graph& a, int x, const mcg::Graph& b, int y, std::mt19937_64& rng) {
  const int na = a.order();
  auto map_a = [&](int v) { return v < x ? v : v - 1; };
  auto map_b = [&](int v) { return na - 1 + (v < y ? v : v - 1); };
  std::vector<mcg::Edge> edges;
  std::vector<int> ends_a, ends_b;
  for (const mcg::Edge& e : a.edges()) {
    if (e.touches(x)) ends_a.push_back(map_a(e.other(x)));
    else edges.push_back({map_a(e.u), map_a(e.v)});
  }
  for (const mcg::Edge& e : b.edges()) {
    if (e.touches(y)) ends_b.push_back(map_b(e.other(y)));
    else edges.push_back({map_b(e.u), map_b(e.v)});
  }
  std::shuffle(ends_b.begin(), ends_b.end(), rng);
  for (std::size_t i = 0; i < ends_a.size(); ++i) edges.push_back({ends_a[i], ends_b[i]});
  return mcg::Graph(na + b.order() - 2, edges);
}

/// Random matching covered graph with 4 <= n <= max_n (max_n even, >= 4).
/// Mixes dense random graphs, bipartite graphs and splices of two smaller
/// matching covered graphs.
inline mcg::Graph matching_covered_graph(int max_n, std::mt19937_64& rng) {
  while (true) {
    const int kind = static_cast<int>(rng() % 3);
    mcg::Graph g(0, {});
    if (kind == 0) {
      const int n = 4 + 2 * static_cast<int>(rng() % static_cast<std::uint64_t>((max_n - 2) / 2));
      g = random_graph(n, std::uniform_real_distribution<double>(0.35, 0.8)(rng), rng);
    } else if (kind == 1) {
      const int half = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>((max_n - 2) / 2));
      g = random_bipartite(half, std::uniform_real_distribution<double>(0.4, 0.9)(rng), rng);
    } else {
      // Parts of orders at most na and nb give at most na + nb - 2 vertices.
      if (max_n < 8) continue;
      const int na = 4 + 2 * static_cast<int>(rng() % 2);
      const int nb = std::min(8, max_n + 2 - na);
      const mcg::Graph a = matching_covered_graph(na, rng);
      const mcg::Graph b = matching_covered_graph(nb, rng);
      const int x = static_cast<int>(rng() % static_cast<std::uint64_t>(a.order()));
      int y = -1;
      for (int t = 0; t < b.order(); ++t) {
        if (b.degree(t) == a.degree(x)) y = t;
      }
      if (y < 0) continue;
      g = splice(a, x, b, y, rng);
    }
    if (g.order() >= 2 && g.order() <= max_n && mcg::is_matching_covered(g)) return relabel_randomly(g, rng);
  }
}

}  // namespace gen
