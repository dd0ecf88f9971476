#pragma once

#include <functional>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

/// Largest order the built-in generator accepts.
inline constexpr int kMaxGeneratedVertices = 10;

/// Filters applied during generation. Both are hereditary under the
/// canonical parent relation used by the generator, so they prune whole
/// subtrees rather than only filtering the output.
struct GenerationFilter {
  bool connected = false;
  int min_degree = 0;
};

/// One graph per isomorphism class of simple graphs on n vertices (subject
/// to `filter`), produced by canonical augmentation: a child G+v is kept
/// only when v is equivalent to the canonically chosen deletion vertex of
/// G+v, and children of one parent are deduplicated by certificate.
///
/// Output graphs are canonically labeled and ordered deterministically
/// (independent of `jobs`). Throws CapacityError unless 1 <= n <= 10.
std::vector<Graph> generate_all_graphs(int n, const GenerationFilter& filter = {}, int jobs = 1);

}  // namespace mcg
