#include "mcg/matching.hpp"

#include <array>
#include <functional>

namespace mcg {

namespace {

void require_matching_capacity(const Graph& g) {
  if (g.order() > kMaxMatchingVertices) {
    throw CapacityError("matching operations are exact only up to " + std::to_string(kMaxMatchingVertices) +
                        " vertices, got " + std::to_string(g.order()));
  }
}

// Edmonds' blossom algorithm on the simple view, restricted to `within`.
class Blossom {
 public:
  Blossom(const Graph& g, VertexMask within) : g_(g), within_(within), n_(g.order()) {
    match_.fill(-1);
  }

  int run() {
    int size = 0;
    // Greedy start.
    for (VertexMask m = within_; m; m &= m - 1) {
      const int v = std::countr_zero(m);
      if (match_[static_cast<std::size_t>(v)] >= 0) continue;
      for (VertexMask nb = g_.neighbors(v) & within_; nb; nb &= nb - 1) {
        const int w = std::countr_zero(nb);
        if (match_[static_cast<std::size_t>(w)] < 0) {
          match_[static_cast<std::size_t>(v)] = w;
          match_[static_cast<std::size_t>(w)] = v;
          ++size;
          break;
        }
      }
    }
    for (VertexMask m = within_; m; m &= m - 1) {
      const int root = std::countr_zero(m);
      if (match_[static_cast<std::size_t>(root)] >= 0) continue;
      int v = find_path(root);
      if (v < 0) continue;
      ++size;
      while (v >= 0) {
        const int pv = parent_[static_cast<std::size_t>(v)];
        const int ppv = match_[static_cast<std::size_t>(pv)];
        match_[static_cast<std::size_t>(v)] = pv;
        match_[static_cast<std::size_t>(pv)] = v;
        v = ppv;
      }
    }
    return size;
  }

 private:
  int& at(std::array<int, Graph::kMaxVertices>& a, int i) { return a[static_cast<std::size_t>(i)]; }

  int lca(int a, int b) {
    VertexMask seen = 0;
    while (true) {
      a = at(base_, a);
      seen |= vertex_bit(a);
      if (at(match_, a) < 0) break;
      a = at(parent_, at(match_, a));
    }
    while (true) {
      b = at(base_, b);
      if (seen & vertex_bit(b)) return b;
      b = at(parent_, at(match_, b));
    }
  }

  void mark_path(int v, int b, int child) {
    while (at(base_, v) != b) {
      blossom_ |= vertex_bit(at(base_, v)) | vertex_bit(at(base_, at(match_, v)));
      at(parent_, v) = child;
      child = at(match_, v);
      v = at(parent_, at(match_, v));
    }
  }

  int find_path(int root) {
    used_ = 0;
    parent_.fill(-1);
    for (int i = 0; i < n_; ++i) at(base_, i) = i;
    used_ |= vertex_bit(root);
    std::array<int, 2 * Graph::kMaxVertices + 2> queue{};
    int head = 0;
    int tail = 0;
    queue[static_cast<std::size_t>(tail++)] = root;
    while (head < tail) {
      const int v = queue[static_cast<std::size_t>(head++)];
      for (VertexMask nb = g_.neighbors(v) & within_; nb; nb &= nb - 1) {
        const int to = std::countr_zero(nb);
        if (at(base_, v) == at(base_, to) || at(match_, v) == to) continue;
        if (to == root || (at(match_, to) >= 0 && at(parent_, at(match_, to)) >= 0)) {
          const int cur = lca(v, to);
          blossom_ = 0;
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (VertexMask m = within_; m; m &= m - 1) {
            const int i = std::countr_zero(m);
            if (blossom_ & vertex_bit(at(base_, i))) {
              at(base_, i) = cur;
              if (!(used_ & vertex_bit(i))) {
                used_ |= vertex_bit(i);
                queue[static_cast<std::size_t>(tail++)] = i;
              }
            }
          }
        } else if (at(parent_, to) < 0) {
          at(parent_, to) = v;
          if (at(match_, to) < 0) return to;
          const int next = at(match_, to);
          used_ |= vertex_bit(next);
          queue[static_cast<std::size_t>(tail++)] = next;
        }
      }
    }
    return -1;
  }

  const Graph& g_;
  VertexMask within_;
  int n_;
  std::array<int, Graph::kMaxVertices> match_{};
  std::array<int, Graph::kMaxVertices> parent_{};
  std::array<int, Graph::kMaxVertices> base_{};
  VertexMask used_ = 0;
  VertexMask blossom_ = 0;
};

// Backtracking over perfect matchings of the vertices in `free`; calls
// `visit` with the chosen edge ids at each leaf. `visit` returns false to
// stop the enumeration.
class MatchingWalker {
 public:
  MatchingWalker(const Graph& g, std::function<bool(const std::vector<int>&)> visit)
      : g_(g), visit_(std::move(visit)) {}

  void run(VertexMask free) { step(free); }

 private:
  bool step(VertexMask free) {
    if (free == 0) return visit_(chosen_);
    const int v = std::countr_zero(free);
    if ((g_.neighbors(v) & free) == 0) return true;
    for (int e : g_.incident(v)) {
      const int w = g_.edge(e).other(v);
      if (!(free & vertex_bit(w))) continue;
      chosen_.push_back(e);
      const bool keep_going = step(free & ~vertex_bit(v) & ~vertex_bit(w));
      chosen_.pop_back();
      if (!keep_going) return false;
    }
    return true;
  }

  const Graph& g_;
  std::function<bool(const std::vector<int>&)> visit_;
  std::vector<int> chosen_;
};

std::uint64_t count_within(const Graph& g, VertexMask free, std::uint64_t cap) {
  std::uint64_t count = 0;
  if (cap == 0) return 0;
  if (popcount(free) % 2 != 0) return 0;
  MatchingWalker walker(g, [&](const std::vector<int>&) { return ++count < cap; });
  walker.run(free);
  return count;
}

}  // namespace

int maximum_matching_size(const Graph& g, VertexMask within) {
  within &= g.vertex_set();
  return Blossom(g, within).run();
}

bool has_perfect_matching_within(const Graph& g, VertexMask within) {
  require_matching_capacity(g);
  within &= g.vertex_set();
  const int k = popcount(within);
  if (k % 2 != 0) return false;
  return 2 * maximum_matching_size(g, within) == k;
}

bool has_perfect_matching(const Graph& g) { return has_perfect_matching_within(g, g.vertex_set()); }

MatchingSet enumerate_perfect_matchings(const Graph& g, std::optional<std::uint64_t> cap) {
  require_matching_capacity(g);
  MatchingSet out{g, {}, true};
  if (cap && *cap == 0) {
    out.complete = !has_perfect_matching(g);
    return out;
  }
  if (g.order() % 2 != 0) return out;
  MatchingWalker walker(g, [&](const std::vector<int>& chosen) {
    if (cap && out.matchings.size() >= *cap) {
      out.complete = false;
      return false;
    }
    Matching m{EdgeSet(g.size())};
    for (int e : chosen) m.edges.set(e);
    out.matchings.push_back(std::move(m));
    return true;
  });
  walker.run(g.vertex_set());
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g, std::uint64_t cap) {
  require_matching_capacity(g);
  return count_within(g, g.vertex_set(), cap);
}

std::uint64_t count_pm_containing(const Graph& g, int e, std::uint64_t cap) {
  require_matching_capacity(g);
  if (e < 0 || e >= g.size()) throw ArgumentError("edge id " + std::to_string(e) + " out of range");
  const Edge& ed = g.edge(e);
  return count_within(g, g.vertex_set() & ~vertex_bit(ed.u) & ~vertex_bit(ed.v), cap);
}

bool is_matching_covered(const Graph& g) {
  require_matching_capacity(g);
  if (g.size() == 0 || !is_connected(g)) return false;
  const VertexMask all = g.vertex_set();
  // Parallel copies share an answer, so test each adjacent pair once.
  for (int v = 0; v < g.order(); ++v) {
    for (VertexMask nb = g.neighbors(v) & ~((vertex_bit(v) << 1) - 1); nb; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      if (!has_perfect_matching_within(g, all & ~vertex_bit(v) & ~vertex_bit(w))) return false;
    }
  }
  return true;
}

bool is_bicritical(const Graph& g) {
  require_matching_capacity(g);
  const int n = g.order();
  if (n < 2 || n % 2 != 0) return false;
  const VertexMask all = g.vertex_set();
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (!has_perfect_matching_within(g, all & ~vertex_bit(u) & ~vertex_bit(v))) return false;
    }
  }
  return true;
}

bool is_brick(const Graph& g) { return is_three_connected(g) && is_bicritical(g); }

std::optional<int> unique_pm_bridge(const Graph& g) {
  require_matching_capacity(g);
  if (!is_connected(g)) throw PreconditionError("unique_pm_bridge: graph is disconnected");
  const MatchingSet pms = enumerate_perfect_matchings(g, 2);
  if (pms.size() != 1) {
    throw PreconditionError("unique_pm_bridge: graph has " +
                            std::string(pms.size() == 0 ? "no" : "more than one") + " perfect matching");
  }
  for (int e : bridges(g)) {
    if (pms.matchings.front().edges.test(e)) return e;
  }
  return std::nullopt;
}

}  // namespace mcg
