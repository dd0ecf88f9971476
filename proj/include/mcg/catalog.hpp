#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "mcg/graph.hpp"

namespace mcg {

struct CatalogEntry {
  std::string name;
  Graph graph;
  /// How the labeling was obtained.
  std::string provenance;
};

/// Named graphs used throughout the census and the tests. Lookup is
/// case-insensitive; throws LookupError listing the valid names.
///
/// Besides the primary names there is one alias,
/// W6_PLUSPLUS_MINUS_Y3Y4, for W6_PLUSPLUS with edge 3-4 deleted.
const CatalogEntry& catalog_entry(std::string_view name);
Graph catalog(std::string_view name);

/// Primary names in a fixed order (aliases excluded).
std::vector<std::string> catalog_names();

/// The four claw-free bricks whose b-invariant edges are all solitary.
std::vector<std::string> family_g_names();

/// Bricks allowed to have fewer than two b-invariant edges.
std::vector<std::string> thm11_exception_names();

}  // namespace mcg
