#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mcg/canonical.hpp"
#include "mcg/graph.hpp"

namespace mcg {

/// Verdicts for one edge of a matching covered graph.
struct EdgeClass {
  int edge = 0;
  bool removable = false;
  /// Only defined for removable edges.
  std::optional<bool> b_invariant;
  bool solitary = false;
  /// Number of perfect matchings containing the edge, capped at 2.
  std::uint64_t pm_count_capped = 0;
};

struct EdgeClassSummary {
  int removable = 0;
  int b_invariant = 0;
  int solitary = 0;
  int b_invariant_and_solitary = 0;
};

struct EdgeClassReport {
  CanonicalForm host;
  std::vector<EdgeClass> edges;
  EdgeClassSummary summary;

  std::vector<int> b_invariant_edges() const;
};

bool is_removable(const Graph& g, int e);
bool is_b_invariant(const Graph& g, int e);
bool is_solitary(const Graph& g, int e);

/// Classifies every edge in edge-id order. b(g) is computed once.
EdgeClassReport classify_all(const Graph& g);

/// True when no edge is b-invariant without also being solitary.
bool every_b_invariant_solitary(const Graph& g);
bool every_b_invariant_solitary(const EdgeClassReport& report);

/// Edges u-v where u lies on a triangle C and v is the only neighbour of u
/// outside C; such edges are nonremovable in a matching covered graph.
/// Pairs joined by parallel edges are skipped.
std::vector<int> triangle_nonremovable_edges(const Graph& g);

}  // namespace mcg
