#include "mcg/graph.hpp"

#include <algorithm>
#include <sstream>

namespace mcg {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n < 0 || n > kMaxVertices) {
    throw GraphError("vertex count " + std::to_string(n) + " outside [0, " +
                     std::to_string(kMaxVertices) + "]");
  }
  adj_.assign(static_cast<std::size_t>(n), 0);
  incident_.assign(static_cast<std::size_t>(n), {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    const std::string pair = "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")";
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw GraphError("endpoint out of range in pair " + pair);
    }
    if (e.u == e.v) throw GraphError("loop " + pair);
    adj_[static_cast<std::size_t>(e.u)] |= vertex_bit(e.v);
    adj_[static_cast<std::size_t>(e.v)] |= vertex_bit(e.u);
    incident_[static_cast<std::size_t>(e.u)].push_back(static_cast<int>(i));
    incident_[static_cast<std::size_t>(e.v)].push_back(static_cast<int>(i));
  }
}

int Graph::multiplicity(int u, int v) const {
  int count = 0;
  for (int e : incident(u)) {
    if (edge(e).other(u) == v) ++count;
  }
  return count;
}

bool Graph::has_parallel_edges() const {
  int distinct = 0;
  for (int v = 0; v < n_; ++v) distinct += simple_degree(v);
  return distinct / 2 != size();
}

Graph Graph::without_edge(int e) const {
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  for (int i = 0; i < size(); ++i) {
    if (i != e) kept.push_back(edges_[static_cast<std::size_t>(i)]);
  }
  return Graph(n_, std::move(kept));
}

Graph Graph::without_edges(std::span<const int> edge_ids) const {
  std::vector<bool> drop(edges_.size(), false);
  for (int e : edge_ids) drop.at(static_cast<std::size_t>(e)) = true;
  std::vector<Edge> kept;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (!drop[i]) kept.push_back(edges_[i]);
  }
  return Graph(n_, std::move(kept));
}

Graph Graph::induced(VertexMask keep) const {
  keep &= vertex_set();
  std::vector<int> id(static_cast<std::size_t>(n_), -1);
  int next = 0;
  for (int v = 0; v < n_; ++v) {
    if (keep & vertex_bit(v)) id[static_cast<std::size_t>(v)] = next++;
  }
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    const int a = id[static_cast<std::size_t>(e.u)];
    const int b = id[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back({a, b});
  }
  return Graph(next, std::move(kept));
}

Graph Graph::relabeled(std::span<const int> perm) const {
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) {
    mapped.push_back({perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]});
  }
  return Graph(n_, std::move(mapped));
}

std::string Graph::to_string() const {
  std::ostringstream out;
  out << "n=" << n_ << " m=" << size() << " [";
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    if (i) out << ' ';
    out << edges_[i].u << '-' << edges_[i].v;
  }
  out << ']';
  return out.str();
}

Graph build(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [u, v] : pairs) edges.push_back({u, v});
  return Graph(n, std::move(edges));
}

Graph from_adjacency(int n, std::span<const VertexMask> adj) {
  std::vector<Edge> edges;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u) {
      if (adj[static_cast<std::size_t>(v)] & vertex_bit(u)) edges.push_back({u, v});
    }
  }
  return Graph(n, std::move(edges));
}

Graph underlying_simple(const Graph& g) { return from_adjacency(g.order(), g.adjacency()); }

Contraction contract(const Graph& g, VertexMask shore) {
  const int n = g.order();
  shore &= g.vertex_set();
  if (shore == 0 || shore == g.vertex_set()) {
    throw ArgumentError("contraction shore must be a nonempty proper vertex subset");
  }
  Contraction result;
  result.vertex_map.assign(static_cast<std::size_t>(n), -1);
  int next = 0;
  for (int v = 0; v < n; ++v) {
    if (!(shore & vertex_bit(v))) result.vertex_map[static_cast<std::size_t>(v)] = next++;
  }
  result.contracted = next;
  for (int v = 0; v < n; ++v) {
    if (shore & vertex_bit(v)) result.vertex_map[static_cast<std::size_t>(v)] = next;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    const int a = result.vertex_map[static_cast<std::size_t>(e.u)];
    const int b = result.vertex_map[static_cast<std::size_t>(e.v)];
    if (a != b) edges.push_back({a, b});
  }
  result.graph = Graph(next + 1, std::move(edges));
  return result;
}

namespace {

VertexMask reach_within(const Graph& g, int start, VertexMask within) {
  VertexMask seen = vertex_bit(start);
  VertexMask frontier = seen;
  while (frontier) {
    VertexMask next = 0;
    for (VertexMask f = frontier; f; f &= f - 1) {
      next |= g.neighbors(std::countr_zero(f));
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

}  // namespace

bool is_connected_within(const Graph& g, VertexMask within) {
  if (within == 0) return true;
  return reach_within(g, std::countr_zero(within), within) == within;
}

int component_count_within(const Graph& g, VertexMask within) {
  int count = 0;
  while (within) {
    within &= ~reach_within(g, std::countr_zero(within), within);
    ++count;
  }
  return count;
}

bool is_connected(const Graph& g) { return is_connected_within(g, g.vertex_set()); }

bool is_bipartite(const Graph& g) {
  const int n = g.order();
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  std::vector<int> queue;
  for (int s = 0; s < n; ++s) {
    if (side[static_cast<std::size_t>(s)] >= 0) continue;
    side[static_cast<std::size_t>(s)] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int v = queue[head];
      for (VertexMask m = g.neighbors(v); m; m &= m - 1) {
        const int w = std::countr_zero(m);
        int& sw = side[static_cast<std::size_t>(w)];
        if (sw < 0) {
          sw = 1 - side[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (sw == side[static_cast<std::size_t>(v)]) {
          return false;
        }
      }
    }
  }
  return true;
}

std::vector<int> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<int> found;
  int clock = 0;

  // Iterative DFS; the parent is tracked by edge id so parallel edges give
  // back edges.
  struct Frame {
    int v;
    int via;
    std::size_t next;
  };
  for (int root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] >= 0) continue;
    std::vector<Frame> stack{{root, -1, 0}};
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = clock++;
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto& inc = g.incident(top.v);
      if (top.next < inc.size()) {
        const int e = inc[top.next++];
        if (e == top.via) continue;
        const int w = g.edge(e).other(top.v);
        if (disc[static_cast<std::size_t>(w)] < 0) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = clock++;
          stack.push_back({w, e, 0});
        } else {
          low[static_cast<std::size_t>(top.v)] =
              std::min(low[static_cast<std::size_t>(top.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const Frame done = top;
        stack.pop_back();
        if (!stack.empty()) {
          const int parent = stack.back().v;
          low[static_cast<std::size_t>(parent)] =
              std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(parent)]) {
            found.push_back(done.via);
          }
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

int min_degree(const Graph& g) {
  int best = g.order() == 0 ? 0 : Graph::kMaxVertices;
  for (int v = 0; v < g.order(); ++v) best = std::min(best, g.simple_degree(v));
  return best;
}

bool is_three_connected(const Graph& g) {
  const int n = g.order();
  if (n < 4) return false;
  const VertexMask all = g.vertex_set();
  if (!is_connected_within(g, all)) return false;
  for (int a = 0; a < n; ++a) {
    const VertexMask without_a = all & ~vertex_bit(a);
    if (!is_connected_within(g, without_a)) return false;
    for (int b = a + 1; b < n; ++b) {
      if (!is_connected_within(g, without_a & ~vertex_bit(b))) return false;
    }
  }
  return true;
}

bool is_claw_free(const Graph& g) {
  for (int c = 0; c < g.order(); ++c) {
    const VertexMask nbrs = g.neighbors(c);
    for (VertexMask a = nbrs; a; a &= a - 1) {
      const int x = std::countr_zero(a);
      // Candidates after x that are non-adjacent to x.
      const VertexMask rest_x = nbrs & ~g.neighbors(x) & ~((vertex_bit(x) << 1) - 1);
      for (VertexMask b = rest_x; b; b &= b - 1) {
        const int y = std::countr_zero(b);
        const VertexMask rest_y = rest_x & ~g.neighbors(y) & ~((vertex_bit(y) << 1) - 1);
        if (rest_y) return false;
      }
    }
  }
  return true;
}

VertexMask cut_vertices(const Graph& g) {
  const VertexMask all = g.vertex_set();
  const int base = component_count_within(g, all);
  VertexMask cuts = 0;
  for (int v = 0; v < g.order(); ++v) {
    if (component_count_within(g, all & ~vertex_bit(v)) > base) cuts |= vertex_bit(v);
  }
  return cuts;
}

std::vector<int> boundary_edges(const Graph& g, VertexMask shore) {
  std::vector<int> out;
  for (int e = 0; e < g.size(); ++e) {
    const Edge& ed = g.edge(e);
    const bool a = (shore & vertex_bit(ed.u)) != 0;
    const bool b = (shore & vertex_bit(ed.v)) != 0;
    if (a != b) out.push_back(e);
  }
  return out;
}

}  // namespace mcg
