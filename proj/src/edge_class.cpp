#include "mcg/edge_class.hpp"

#include <algorithm>

#include "mcg/matching.hpp"
#include "mcg/tight_cut.hpp"

namespace mcg {

namespace {

void check_edge(const Graph& g, int e) {
  if (e < 0 || e >= g.size()) throw ArgumentError("edge id " + std::to_string(e) + " out of range");
}

void require_matching_covered(const Graph& g) {
  if (!is_matching_covered(g)) throw PreconditionError("edge classification needs a matching covered graph");
}

EdgeClass classify_edge(const Graph& g, int e, int b_of_g) {
  EdgeClass c;
  c.edge = e;
  const Graph minus = g.without_edge(e);
  c.removable = is_matching_covered(minus);
  if (c.removable) c.b_invariant = b_count(minus) == b_of_g;
  c.pm_count_capped = count_pm_containing(g, e, 2);
  c.solitary = c.pm_count_capped == 1;
  return c;
}

}  // namespace

bool is_removable(const Graph& g, int e) {
  check_edge(g, e);
  require_matching_covered(g);
  return is_matching_covered(g.without_edge(e));
}

bool is_b_invariant(const Graph& g, int e) {
  if (!is_removable(g, e)) return false;
  return b_count(g.without_edge(e)) == b_count(g);
}

bool is_solitary(const Graph& g, int e) {
  check_edge(g, e);
  if (!has_perfect_matching(g)) throw PreconditionError("solitary test needs a graph with a perfect matching");
  return count_pm_containing(g, e, 2) == 1;
}

std::vector<int> EdgeClassReport::b_invariant_edges() const {
  std::vector<int> out;
  for (const EdgeClass& c : edges) {
    if (c.b_invariant.value_or(false)) out.push_back(c.edge);
  }
  return out;
}

EdgeClassReport classify_all(const Graph& g) {
  require_matching_covered(g);
  EdgeClassReport report;
  report.host = canonical_form(g);
  const int b_of_g = b_count(g);
  report.edges.reserve(static_cast<std::size_t>(g.size()));
  for (int e = 0; e < g.size(); ++e) {
    const EdgeClass c = classify_edge(g, e, b_of_g);
    const bool b_inv = c.b_invariant.value_or(false);
    report.summary.removable += c.removable;
    report.summary.b_invariant += b_inv;
    report.summary.solitary += c.solitary;
    report.summary.b_invariant_and_solitary += b_inv && c.solitary;
    report.edges.push_back(c);
  }
  return report;
}

bool every_b_invariant_solitary(const EdgeClassReport& report) {
  return report.summary.b_invariant == report.summary.b_invariant_and_solitary;
}

bool every_b_invariant_solitary(const Graph& g) { return every_b_invariant_solitary(classify_all(g)); }

std::vector<int> triangle_nonremovable_edges(const Graph& g) {
  std::vector<int> out;
  for (int u = 0; u < g.order(); ++u) {
    const VertexMask nbrs = g.neighbors(u);
    for (VertexMask a = nbrs; a; a &= a - 1) {
      const int x = std::countr_zero(a);
      for (VertexMask b = nbrs & g.neighbors(x) & ~((vertex_bit(x) << 1) - 1); b; b &= b - 1) {
        const int y = std::countr_zero(b);
        const VertexMask outside = nbrs & ~vertex_bit(x) & ~vertex_bit(y);
        if (popcount(outside) != 1) continue;
        const int v = std::countr_zero(outside);
        if (g.multiplicity(u, v) != 1) continue;
        for (int e : g.incident(u)) {
          if (g.edge(e).other(u) == v) out.push_back(e);
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace mcg
