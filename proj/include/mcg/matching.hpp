#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcg/edge_set.hpp"
#include "mcg/graph.hpp"

namespace mcg {

/// Largest order for which matching operations run. Beyond it they throw
/// CapacityError instead of approximating.
inline constexpr int kMaxMatchingVertices = 32;

/// A perfect matching, as the set of its edge ids in the host graph.
struct Matching {
  EdgeSet edges;

  friend bool operator==(const Matching&, const Matching&) = default;
};

/// Perfect matchings of `host` in enumeration order. When `complete` is
/// false the enumeration stopped at the requested cap.
struct MatchingSet {
  Graph host;
  std::vector<Matching> matchings;
  bool complete = true;

  std::size_t size() const { return matchings.size(); }
};

/// Size of a maximum matching in the simple subgraph induced by `within`
/// (Edmonds' blossom algorithm).
int maximum_matching_size(const Graph& g, VertexMask within);

bool has_perfect_matching(const Graph& g);
/// Perfect matching of the subgraph induced by `within`.
bool has_perfect_matching_within(const Graph& g, VertexMask within);

/// Enumerates perfect matchings: the lowest unmatched vertex is matched
/// next, trying its incident edges in edge-id order. Parallel edges give
/// distinct matchings.
MatchingSet enumerate_perfect_matchings(const Graph& g, std::optional<std::uint64_t> cap = std::nullopt);

/// Number of perfect matchings, stopping once `cap` is reached.
std::uint64_t count_perfect_matchings(const Graph& g, std::uint64_t cap = UINT64_MAX);

/// Number of perfect matchings that contain edge e, stopping at `cap`.
std::uint64_t count_pm_containing(const Graph& g, int e, std::uint64_t cap);

bool is_matching_covered(const Graph& g);
bool is_bicritical(const Graph& g);
bool is_brick(const Graph& g);

/// For a connected graph with exactly one perfect matching, returns the
/// lowest-id bridge lying in that matching. Throws PreconditionError when
/// the graph is disconnected or its perfect matching is absent or not
/// unique. An empty result would contradict Kotzig's theorem.
std::optional<int> unique_pm_bridge(const Graph& g);

}  // namespace mcg
