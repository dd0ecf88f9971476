#include "mcg/generate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <numeric>
#include <thread>
#include <unordered_set>

#include "mcg/canonical.hpp"
#include "mcg/graph6.hpp"

namespace mcg {

namespace {

// Minimum simple degree a graph on k vertices must have so that it can
// still reach `filter.min_degree` after growing to n vertices.
int degree_floor(const GenerationFilter& filter, int k, int n) { return filter.min_degree - (n - k); }

bool passes(const Graph& g, const GenerationFilter& filter, int n) {
  if (filter.connected && !is_connected(g)) return false;
  return g.order() == 0 || min_degree(g) >= degree_floor(filter, g.order(), n);
}

bool same_orbit_by_generators(const CanonicalLabeling& lab, int v, int w) {
  const std::size_t n = lab.label.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)];
    return x;
  };
  for (const auto& a : lab.automorphisms) {
    for (std::size_t x = 0; x < n; ++x) {
      const int rx = find(static_cast<int>(x));
      const int ry = find(a[x]);
      if (rx != ry) parent[static_cast<std::size_t>(rx)] = ry;
    }
  }
  return find(v) == find(w);
}

// Deletion candidates: non-cut vertices of minimum (degree, neighbour
// degree sum). Non-cut keeps connected graphs' parents connected.
VertexMask deletion_candidates(const Graph& g) {
  const VertexMask allowed = g.vertex_set() & ~cut_vertices(g);
  VertexMask best = 0;
  std::pair<int, int> best_key{Graph::kMaxVertices + 1, 0};
  for (VertexMask m = allowed; m; m &= m - 1) {
    const int v = std::countr_zero(m);
    int sum = 0;
    for (VertexMask nb = g.neighbors(v); nb; nb &= nb - 1) sum += g.simple_degree(std::countr_zero(nb));
    const std::pair<int, int> key{g.simple_degree(v), sum};
    if (key < best_key) {
      best_key = key;
      best = vertex_bit(v);
    } else if (key == best_key) {
      best |= vertex_bit(v);
    }
  }
  return best;
}

std::vector<Graph> children_of(const Graph& parent, const GenerationFilter& filter, int n) {
  const int k = parent.order();
  const int floor = degree_floor(filter, k + 1, n);
  VertexMask must = 0;
  for (int v = 0; v < k; ++v) {
    if (parent.simple_degree(v) < floor) must |= vertex_bit(v);
  }
  std::vector<Graph> out;
  std::unordered_set<std::string> seen;
  std::array<VertexMask, Graph::kMaxVertices> adj{};
  const VertexMask subsets = VertexMask{1} << k;
  for (VertexMask s = 0; s < subsets; ++s) {
    if ((s & must) != must) continue;
    if (popcount(s) < floor) continue;
    if (filter.connected && s == 0) continue;
    for (int v = 0; v < k; ++v) {
      adj[static_cast<std::size_t>(v)] = parent.neighbors(v) | ((s >> v) & 1 ? vertex_bit(k) : 0);
    }
    adj[static_cast<std::size_t>(k)] = s;
    const Graph child = from_adjacency(k + 1, std::span<const VertexMask>(adj.data(), static_cast<std::size_t>(k + 1)));

    const VertexMask candidates = deletion_candidates(child);
    if (!(candidates & vertex_bit(k))) continue;
    const CanonicalLabeling lab = canonical_labeling(child);
    if (popcount(candidates) > 1) {
      int chosen = -1;
      for (VertexMask m = candidates; m; m &= m - 1) {
        const int v = std::countr_zero(m);
        if (chosen < 0 || lab.label[static_cast<std::size_t>(v)] > lab.label[static_cast<std::size_t>(chosen)]) {
          chosen = v;
        }
      }
      if (chosen != k && !same_orbit_by_generators(lab, chosen, k) && !same_orbit(child, chosen, k)) continue;
    }
    if (seen.insert(lab.certificate).second) out.push_back(parse_graph6(lab.certificate));
  }
  return out;
}

std::vector<Graph> expand(const std::vector<Graph>& parents, const GenerationFilter& filter, int n, int jobs) {
  std::vector<std::vector<Graph>> per_parent(parents.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < parents.size(); i = next++) {
      per_parent[i] = children_of(parents[i], filter, n);
    }
  };
  const int threads = std::max(1, std::min<int>(jobs, static_cast<int>(parents.size())));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  std::vector<Graph> out;
  for (auto& batch : per_parent) {
    for (Graph& g : batch) out.push_back(std::move(g));
  }
  return out;
}

}  // namespace

std::vector<Graph> generate_all_graphs(int n, const GenerationFilter& filter, int jobs) {
  if (n < 1 || n > kMaxGeneratedVertices) {
    throw CapacityError("built-in generation supports 1 <= n <= " + std::to_string(kMaxGeneratedVertices) +
                        ", got " + std::to_string(n));
  }
  std::vector<Graph> level;
  if (passes(Graph(1, {}), filter, n)) level.push_back(Graph(1, {}));
  for (int k = 1; k < n && !level.empty(); ++k) level = expand(level, filter, n, jobs);
  return level;
}

}  // namespace mcg
