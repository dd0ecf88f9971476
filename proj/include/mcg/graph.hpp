#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "mcg/errors.hpp"

namespace mcg {

/// Bit set over vertex ids; bit i stands for vertex i.
using VertexMask = std::uint64_t;

inline constexpr VertexMask vertex_bit(int v) { return VertexMask{1} << v; }

inline constexpr VertexMask all_vertices(int n) {
  return n >= 64 ? ~VertexMask{0} : (VertexMask{1} << n) - 1;
}

inline int popcount(VertexMask m) { return std::popcount(m); }

/// Unordered vertex pair. Stored as given; `u != v` always holds in a Graph.
struct Edge {
  int u = 0;
  int v = 0;

  int other(int w) const { return w == u ? v : u; }
  bool touches(int w) const { return u == w || v == w; }
  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Labeled loopless multigraph on vertices 0..n-1.
///
/// The edge list is the identity of the graph: edge index i always denotes
/// the same pair, and parallel pairs are kept as distinct edges. A simple
/// adjacency view (one bit per distinct neighbour) is derived on
/// construction. Values are immutable after construction.
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() = default;
  Graph(int n, std::vector<Edge> edges);
  Graph(int n, std::initializer_list<Edge> edges)
      : Graph(n, std::vector<Edge>(edges)) {}

  int order() const { return n_; }
  int size() const { return static_cast<int>(edges_.size()); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

  /// Distinct neighbours of v.
  VertexMask neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  /// Edge ids incident with v, in increasing order.
  const std::vector<int>& incident(int v) const {
    return incident_[static_cast<std::size_t>(v)];
  }
  /// Number of edges at v, counting parallel edges separately.
  int degree(int v) const { return static_cast<int>(incident(v).size()); }
  /// Number of distinct neighbours of v.
  int simple_degree(int v) const { return popcount(neighbors(v)); }
  bool adjacent(int u, int v) const { return (neighbors(u) & vertex_bit(v)) != 0; }
  int multiplicity(int u, int v) const;
  bool has_parallel_edges() const;
  VertexMask vertex_set() const { return all_vertices(n_); }
  std::span<const VertexMask> adjacency() const { return adj_; }

  /// Copy of the graph with edge e deleted; later edge ids shift down by one.
  Graph without_edge(int e) const;
  /// Copy with every edge whose id is in `edge_ids` deleted.
  Graph without_edges(std::span<const int> edge_ids) const;
  /// Subgraph induced by `keep`; vertices are renumbered in increasing order.
  Graph induced(VertexMask keep) const;
  /// Copy with the given vertices deleted.
  Graph without_vertices(VertexMask drop) const { return induced(vertex_set() & ~drop); }
  /// Relabels vertex v as `perm[v]`; the edge order is preserved.
  Graph relabeled(std::span<const int> perm) const;

  std::string to_string() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<VertexMask> adj_;
  std::vector<std::vector<int>> incident_;
};

/// Builds a graph from vertex pairs, keeping their order and multiplicity.
Graph build(int n, std::span<const std::pair<int, int>> pairs);

/// Same vertex set with parallel edges collapsed; edges sorted by (max, min).
Graph underlying_simple(const Graph& g);

/// Graph built from a simple adjacency; edges in graph6 column order.
Graph from_adjacency(int n, std::span<const VertexMask> adj);

/// Result of shrinking a vertex set to a single vertex.
struct Contraction {
  Graph graph;
  /// vertex_map[old] = id of the vertex in `graph`.
  std::vector<int> vertex_map;
  /// Id of the contracted vertex (always the highest).
  int contracted = 0;
};

/// Shrinks `shore` to one vertex. Edges inside the shore are dropped, edges
/// leaving it are kept with multiplicity, everything else is untouched and
/// keeps its relative order.
Contraction contract(const Graph& g, VertexMask shore);

bool is_connected(const Graph& g);
/// Connectivity of the simple subgraph induced by `within`. Empty sets count
/// as connected.
bool is_connected_within(const Graph& g, VertexMask within);
int component_count_within(const Graph& g, VertexMask within);
bool is_bipartite(const Graph& g);
/// Edge ids whose removal disconnects their component. Parallel edges are
/// never bridges.
std::vector<int> bridges(const Graph& g);
int min_degree(const Graph& g);
bool is_three_connected(const Graph& g);
bool is_claw_free(const Graph& g);
/// Mask of vertices whose removal increases the number of components.
VertexMask cut_vertices(const Graph& g);

/// Edges with exactly one end in `shore`.
std::vector<int> boundary_edges(const Graph& g, VertexMask shore);

}  // namespace mcg
