#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// Isomorphism certificate of the underlying simple graph.
///
/// `bytes` is the graph6 encoding of the canonically relabeled simple graph,
/// so two graphs share a certificate exactly when their underlying simple
/// graphs are isomorphic. Parallel edges are ignored.
struct CanonicalForm {
  std::string bytes;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

/// Output of a canonical labeling search.
struct CanonicalLabeling {
  /// label[v] = canonical position of vertex v.
  std::vector<int> label;
  /// Automorphism generators discovered during the search (as vertex maps).
  /// They are genuine automorphisms but need not generate the full group.
  std::vector<std::vector<int>> automorphisms;
  /// graph6 of the relabeled simple graph, prefixed by colour-class sizes
  /// when a colouring was supplied.
  std::string certificate;
};

/// Canonical labeling by equitable refinement plus individualization
/// search, pruned with discovered automorphisms. `colors` (optional, one
/// value per vertex) restricts the labeling to colour-preserving maps;
/// vertices of smaller colour value come first. Intended for n <= 16.
CanonicalLabeling canonical_labeling(const Graph& g, std::span<const int> colors = {});

CanonicalForm canonical_form(const Graph& g);

/// Canonical relabeling of the underlying simple graph.
Graph canonical_graph(const Graph& g);

bool is_isomorphic(const Graph& a, const Graph& b);

/// True when some automorphism of the simple view maps v to w.
bool same_orbit(const Graph& g, int v, int w);

}  // namespace mcg
