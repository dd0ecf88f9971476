#include "mcg/canonical.hpp"

#include <algorithm>
#include <array>
#include <numeric>

#include "mcg/graph6.hpp"

namespace mcg {

namespace {

using Rows = std::array<VertexMask, Graph::kMaxVertices>;
using VertexMap = std::array<std::int8_t, Graph::kMaxVertices>;

// Ordered partition of the vertex set: `elem` lists vertices, and a cell
// starts at every position p with `start[p]`.
struct Partition {
  int n = 0;
  VertexMap elem{};
  std::array<bool, Graph::kMaxVertices + 1> start{};

  int cell_end(int p) const {
    int q = p + 1;
    while (q < n && !start[static_cast<std::size_t>(q)]) ++q;
    return q;
  }

  VertexMask mask(int from, int to) const {
    VertexMask m = 0;
    for (int p = from; p < to; ++p) m |= vertex_bit(elem[static_cast<std::size_t>(p)]);
    return m;
  }
};

// Splits cells by neighbour counts into each cell until the partition is
// equitable. Every choice depends only on the cell sequence, so the result
// commutes with relabeling.
void refine(Partition& p, const VertexMask* adj) {
  std::array<int, Graph::kMaxVertices> key{};
  bool changed = true;
  while (changed) {
    changed = false;
    for (int s = 0; s < p.n && !changed;) {
      const int se = p.cell_end(s);
      const VertexMask splitter = p.mask(s, se);
      for (int c = 0; c < p.n;) {
        const int ce = p.cell_end(c);
        if (ce - c > 1) {
          bool uniform = true;
          for (int q = c; q < ce; ++q) {
            key[static_cast<std::size_t>(q)] =
                popcount(adj[p.elem[static_cast<std::size_t>(q)]] & splitter);
            if (key[static_cast<std::size_t>(q)] != key[static_cast<std::size_t>(c)]) uniform = false;
          }
          if (!uniform) {
            std::array<std::pair<int, int>, Graph::kMaxVertices> tmp{};
            for (int q = c; q < ce; ++q) {
              tmp[static_cast<std::size_t>(q - c)] = {key[static_cast<std::size_t>(q)],
                                                      p.elem[static_cast<std::size_t>(q)]};
            }
            std::stable_sort(tmp.begin(), tmp.begin() + (ce - c),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            for (int q = c; q < ce; ++q) {
              p.elem[static_cast<std::size_t>(q)] =
                  static_cast<std::int8_t>(tmp[static_cast<std::size_t>(q - c)].second);
              if (q > c && tmp[static_cast<std::size_t>(q - c)].first !=
                               tmp[static_cast<std::size_t>(q - c - 1)].first) {
                p.start[static_cast<std::size_t>(q)] = true;
              }
            }
            changed = true;
          }
        }
        c = ce;
      }
      s = se;
    }
  }
}

class LabelSearch {
 public:
  LabelSearch(int n, const VertexMask* adj) : n_(n), adj_(adj) {}

  void run(Partition root) { search(root); }

  CanonicalLabeling result() const {
    CanonicalLabeling out;
    out.label.resize(static_cast<std::size_t>(n_));
    for (int pos = 0; pos < n_; ++pos) {
      out.label[static_cast<std::size_t>(best_inv_[static_cast<std::size_t>(pos)])] = pos;
    }
    for (const VertexMap& a : autos_) {
      out.automorphisms.emplace_back(a.begin(), a.begin() + n_);
    }
    return out;
  }

  const Rows& best_rows() const { return best_rows_; }

 private:
  void leaf(const Partition& p) {
    VertexMap label{};
    for (int pos = 0; pos < n_; ++pos) {
      label[static_cast<std::size_t>(p.elem[static_cast<std::size_t>(pos)])] =
          static_cast<std::int8_t>(pos);
    }
    Rows rows{};
    for (int v = 0; v < n_; ++v) {
      VertexMask mapped = 0;
      for (VertexMask m = adj_[v]; m; m &= m - 1) {
        mapped |= vertex_bit(label[static_cast<std::size_t>(std::countr_zero(m))]);
      }
      rows[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])] = mapped;
    }
    if (!have_leaf_) {
      have_leaf_ = true;
      first_rows_ = best_rows_ = rows;
      first_inv_ = best_inv_ = p.elem;
      return;
    }
    auto same = [&](const Rows& other) {
      return std::equal(rows.begin(), rows.begin() + n_, other.begin());
    };
    auto record = [&](const VertexMap& inv) {
      VertexMap gamma{};
      for (int v = 0; v < n_; ++v) {
        gamma[static_cast<std::size_t>(v)] = inv[static_cast<std::size_t>(label[static_cast<std::size_t>(v)])];
      }
      autos_.push_back(gamma);
    };
    if (same(first_rows_)) {
      record(first_inv_);
      return;
    }
    const int cmp = compare(rows, best_rows_);
    if (cmp == 0) {
      record(best_inv_);
    } else if (cmp > 0) {
      best_rows_ = rows;
      best_inv_ = p.elem;
    }
  }

  int compare(const Rows& a, const Rows& b) const {
    for (int i = 0; i < n_; ++i) {
      if (a[static_cast<std::size_t>(i)] != b[static_cast<std::size_t>(i)]) {
        return a[static_cast<std::size_t>(i)] < b[static_cast<std::size_t>(i)] ? -1 : 1;
      }
    }
    return 0;
  }

  // Orbit representative of v under the automorphisms that fix the current
  // path pointwise.
  bool equivalent_to_tried(int v, const std::vector<int>& tried) const {
    if (tried.empty() || autos_.empty()) return false;
    std::array<int, Graph::kMaxVertices> parent{};
    std::iota(parent.begin(), parent.begin() + n_, 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      }
      return x;
    };
    bool any = false;
    for (const VertexMap& a : autos_) {
      bool fixes = true;
      for (int f : path_) {
        if (a[static_cast<std::size_t>(f)] != f) {
          fixes = false;
          break;
        }
      }
      if (!fixes) continue;
      any = true;
      for (int x = 0; x < n_; ++x) {
        const int rx = find(x);
        const int ry = find(a[static_cast<std::size_t>(x)]);
        if (rx != ry) parent[static_cast<std::size_t>(rx)] = ry;
      }
    }
    if (!any) return false;
    const int rv = find(v);
    return std::any_of(tried.begin(), tried.end(), [&](int t) { return find(t) == rv; });
  }

  void search(Partition p) {
    refine(p, adj_);
    int cell = -1;
    for (int c = 0; c < p.n;) {
      const int ce = p.cell_end(c);
      if (ce - c > 1) {
        cell = c;
        break;
      }
      c = ce;
    }
    if (cell < 0) {
      leaf(p);
      return;
    }
    const int cell_end = p.cell_end(cell);
    std::vector<int> tried;
    for (int pos = cell; pos < cell_end; ++pos) {
      const int v = p.elem[static_cast<std::size_t>(pos)];
      if (equivalent_to_tried(v, tried)) continue;
      Partition child = p;
      std::swap(child.elem[static_cast<std::size_t>(cell)], child.elem[static_cast<std::size_t>(pos)]);
      child.start[static_cast<std::size_t>(cell + 1)] = true;
      path_.push_back(v);
      search(child);
      path_.pop_back();
      tried.push_back(v);
    }
  }

  int n_;
  const VertexMask* adj_;
  bool have_leaf_ = false;
  Rows first_rows_{};
  Rows best_rows_{};
  VertexMap first_inv_{};
  VertexMap best_inv_{};
  std::vector<VertexMap> autos_;
  std::vector<int> path_;
};

std::string color_prefix(std::span<const int> sorted_colors) {
  std::string out = "c";
  std::size_t run = 0;
  for (std::size_t i = 0; i < sorted_colors.size(); ++i) {
    ++run;
    if (i + 1 == sorted_colors.size() || sorted_colors[i + 1] != sorted_colors[i]) {
      out += std::to_string(sorted_colors[i]) + ":" + std::to_string(run) + ",";
      run = 0;
    }
  }
  return out + ";";
}

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors) {
  const int n = g.order();
  if (!colors.empty() && static_cast<int>(colors.size()) != n) {
    throw ArgumentError("colour vector length does not match vertex count");
  }
  Partition root;
  root.n = n;
  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  if (!colors.empty()) {
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return colors[static_cast<std::size_t>(a)] < colors[static_cast<std::size_t>(b)];
    });
  }
  for (int pos = 0; pos < n; ++pos) {
    root.elem[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(order[static_cast<std::size_t>(pos)]);
    root.start[static_cast<std::size_t>(pos)] =
        pos == 0 || (!colors.empty() && colors[static_cast<std::size_t>(order[static_cast<std::size_t>(pos)])] !=
                                            colors[static_cast<std::size_t>(order[static_cast<std::size_t>(pos - 1)])]);
  }

  CanonicalLabeling out;
  if (n == 0) {
    out.certificate = to_graph6(g);
    return out;
  }
  LabelSearch search(n, g.adjacency().data());
  search.run(root);
  out = search.result();
  const Rows& rows = search.best_rows();
  out.certificate = to_graph6(from_adjacency(n, std::span<const VertexMask>(rows.data(), static_cast<std::size_t>(n))));
  if (!colors.empty()) {
    std::vector<int> sorted(colors.begin(), colors.end());
    std::sort(sorted.begin(), sorted.end());
    out.certificate = color_prefix(sorted) + out.certificate;
  }
  return out;
}

CanonicalForm canonical_form(const Graph& g) { return {canonical_labeling(g).certificate}; }

Graph canonical_graph(const Graph& g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  return underlying_simple(underlying_simple(g).relabeled(lab.label));
}

bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order()) return false;
  const Graph sa = underlying_simple(a);
  const Graph sb = underlying_simple(b);
  if (sa.size() != sb.size()) return false;
  return canonical_form(sa) == canonical_form(sb);
}

bool same_orbit(const Graph& g, int v, int w) {
  if (v == w) return true;
  const int n = g.order();
  std::vector<int> colors(static_cast<std::size_t>(n), 1);
  colors[static_cast<std::size_t>(v)] = 0;
  const std::string cv = canonical_labeling(g, colors).certificate;
  colors[static_cast<std::size_t>(v)] = 1;
  colors[static_cast<std::size_t>(w)] = 0;
  return cv == canonical_labeling(g, colors).certificate;
}

}  // namespace mcg
