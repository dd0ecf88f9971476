#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "mcg/canonical.hpp"
#include "mcg/edge_set.hpp"
#include "mcg/graph.hpp"
#include "mcg/matching.hpp"

namespace mcg {

/// Largest order accepted by the exhaustive tight-cut search.
inline constexpr int kMaxCutSearchVertices = 20;

/// A cut ∂(X): the shore X and its boundary edges. Tightness is never
/// stored; ask is_tight.
struct Cut {
  VertexMask shore = 0;
  EdgeSet boundary;
  bool trivial = false;
};

/// Builds the cut of a nonempty proper shore. Throws ArgumentError otherwise.
Cut make_cut(const Graph& g, VertexMask shore);

/// True when every matching in `pms` meets the boundary of `shore` in
/// exactly one edge. `pms` must be a complete enumeration for g.
bool is_tight(const Graph& g, VertexMask shore, const MatchingSet& pms);

/// First nontrivial tight cut, scanning odd shores with 3 <= |X| <= n-3 and
/// |X| <= |V \ X| by size and then by numeric mask value.
std::optional<Cut> find_nontrivial_tight_cut(const Graph& g);

/// Every nontrivial tight cut found by the same scan, in scan order.
std::vector<Cut> all_nontrivial_tight_cuts(const Graph& g);

/// A final piece of a tight cut decomposition.
struct Piece {
  Graph graph;
  CanonicalForm certificate;
  bool nonbipartite = false;
};

struct TraceStep {
  int depth = 0;
  /// Order of the graph that was split and the shore used, in that graph's
  /// own vertex numbering.
  int order = 0;
  VertexMask shore = 0;
};

struct DecompositionResult {
  std::vector<Piece> pieces;
  int b = 0;
  int braces = 0;
  std::vector<TraceStep> trace;

  /// Piece certificates as a sorted multiset, each tagged with its
  /// brick/brace flag.
  std::vector<std::pair<CanonicalForm, bool>> piece_multiset() const;
};

/// Picks one cut out of the nontrivial tight cuts of the current graph.
using CutChooser = std::function<std::size_t(std::span<const Cut>)>;

/// Tight cut decomposition. Without a chooser the first cut of the scan is
/// used; with one, every nontrivial tight cut is listed and the chooser
/// decides. Throws PreconditionError when g is not matching covered.
DecompositionResult decompose(const Graph& g, const CutChooser& choose = {});

/// Number of bricks in a tight cut decomposition of g.
int b_count(const Graph& g);

}  // namespace mcg
