#include "mcg/tight_cut.hpp"

#include <algorithm>

namespace mcg {

namespace {

void require_cut_capacity(const Graph& g) {
  if (g.order() > kMaxCutSearchVertices) {
    throw CapacityError("tight cut search supports at most " + std::to_string(kMaxCutSearchVertices) +
                        " vertices, got " + std::to_string(g.order()));
  }
}

bool meets_once(const EdgeSet& boundary, const MatchingSet& pms) {
  return std::all_of(pms.matchings.begin(), pms.matchings.end(),
                     [&](const Matching& m) { return m.edges.intersection_count(boundary) == 1; });
}

// Visits shores in scan order; `visit` returns false to stop.
template <typename Visit>
void scan_shores(const Graph& g, const MatchingSet& pms, Visit visit) {
  const int n = g.order();
  for (int k = 3; k <= n - 3 && 2 * k <= n; k += 2) {
    // Gosper's hack walks k-subsets in increasing numeric order.
    VertexMask x = (VertexMask{1} << k) - 1;
    const VertexMask limit = VertexMask{1} << n;
    while (x < limit) {
      Cut cut = make_cut(g, x);
      if (meets_once(cut.boundary, pms) && !visit(std::move(cut))) return;
      const VertexMask c = x & (~x + 1);
      const VertexMask r = x + c;
      x = (((r ^ x) >> 2) / c) | r;
    }
  }
}

void require_complete(const MatchingSet& pms) {
  if (!pms.complete) throw PreconditionError("tightness needs a complete perfect matching enumeration");
}

struct Decomposer {
  const CutChooser& choose;
  DecompositionResult result;

  void run(const Graph& g, int depth) {
    require_cut_capacity(g);
    std::optional<Cut> cut;
    if (choose) {
      std::vector<Cut> cuts = all_nontrivial_tight_cuts(g);
      if (!cuts.empty()) {
        const std::size_t pick = choose(cuts);
        if (pick >= cuts.size()) throw ArgumentError("cut chooser returned an out-of-range index");
        cut = std::move(cuts[pick]);
      }
    } else {
      cut = find_nontrivial_tight_cut(g);
    }
    if (!cut) {
      Piece piece{g, canonical_form(g), !is_bipartite(g)};
      if (piece.nonbipartite) {
        ++result.b;
      } else {
        ++result.braces;
      }
      result.pieces.push_back(std::move(piece));
      return;
    }
    result.trace.push_back({depth, g.order(), cut->shore});
    run(contract(g, cut->shore).graph, depth + 1);
    run(contract(g, g.vertex_set() & ~cut->shore).graph, depth + 1);
  }
};

}  // namespace

Cut make_cut(const Graph& g, VertexMask shore) {
  shore &= g.vertex_set();
  if (shore == 0 || shore == g.vertex_set()) {
    throw ArgumentError("cut shore must be a nonempty proper vertex subset");
  }
  Cut cut{shore, EdgeSet(g.size()), false};
  for (int e : boundary_edges(g, shore)) cut.boundary.set(e);
  const int k = popcount(shore);
  cut.trivial = k == 1 || k == g.order() - 1;
  return cut;
}

bool is_tight(const Graph& g, VertexMask shore, const MatchingSet& pms) {
  require_complete(pms);
  if (pms.host.order() != g.order() || pms.host.size() != g.size()) {
    throw PreconditionError("matching set belongs to a different graph");
  }
  return meets_once(make_cut(g, shore).boundary, pms);
}

std::optional<Cut> find_nontrivial_tight_cut(const Graph& g) {
  require_cut_capacity(g);
  if (!is_matching_covered(g)) throw PreconditionError("tight cut search needs a matching covered graph");
  const MatchingSet pms = enumerate_perfect_matchings(g);
  std::optional<Cut> found;
  scan_shores(g, pms, [&](Cut cut) {
    found = std::move(cut);
    return false;
  });
  return found;
}

std::vector<Cut> all_nontrivial_tight_cuts(const Graph& g) {
  require_cut_capacity(g);
  if (!is_matching_covered(g)) throw PreconditionError("tight cut search needs a matching covered graph");
  const MatchingSet pms = enumerate_perfect_matchings(g);
  std::vector<Cut> cuts;
  scan_shores(g, pms, [&](Cut cut) {
    cuts.push_back(std::move(cut));
    return true;
  });
  return cuts;
}

std::vector<std::pair<CanonicalForm, bool>> DecompositionResult::piece_multiset() const {
  std::vector<std::pair<CanonicalForm, bool>> out;
  out.reserve(pieces.size());
  for (const Piece& p : pieces) out.emplace_back(p.certificate, p.nonbipartite);
  std::sort(out.begin(), out.end());
  return out;
}

DecompositionResult decompose(const Graph& g, const CutChooser& choose) {
  require_cut_capacity(g);
  if (!is_matching_covered(g)) throw PreconditionError("decompose needs a matching covered graph");
  Decomposer d{choose, {}};
  d.run(g, 0);
  return std::move(d.result);
}

int b_count(const Graph& g) { return decompose(g).b; }

}  // namespace mcg
