#include "mcg/catalog.hpp"

#include <algorithm>
#include <cctype>

namespace mcg {

namespace {

std::vector<Edge> r8_edges() {
  // 0..7 = u, v, x1, x2, x11, x12, x21, x22
  return {{0, 1}, {0, 4}, {0, 7}, {1, 5}, {1, 6}, {2, 3},
          {2, 4}, {2, 5}, {3, 6}, {3, 7}, {4, 5}, {6, 7}};
}

std::vector<Edge> w6_plusplus_edges() {
  return {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
          {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}};
}

std::vector<CatalogEntry> make_entries() {
  std::vector<CatalogEntry> out;
  auto add = [&](std::string name, int n, std::vector<Edge> edges, std::string note) {
    out.push_back({std::move(name), Graph(n, std::move(edges)), std::move(note)});
  };

  add("K4", 4, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}, "complete graph on four vertices");
  add("C6BAR", 6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}},
      "triangular prism: triangles 012 and 345, rungs 0-3 1-4 2-5 (complement of the 6-cycle)");
  add("C6BAR_PLUS", 6,
      {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}, {0, 4}},
      "prism plus the non-edge 0-4; all prism non-edges are equivalent under its automorphisms");
  add("PETERSEN", 10,
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5},
       {0, 5}, {1, 6}, {2, 7}, {3, 8}, {4, 9}},
      "outer 5-cycle, inner pentagram 5-7-9-6-8, spokes i-(i+5)");
  add("R8", 8, r8_edges(),
      "u, v, x1, x2, x11, x12, x21, x22; F3 without u-x12 and v-x22");
  add("W6", 6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}},
      "hub 0, rim cycle 1-2-3-4-5");
  add("W6_PLUS", 6,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}, {1, 3}},
      "W6 plus the rim chord 1-3; all rim chords are equivalent");
  add("W6_PLUSPLUS", 6, w6_plusplus_edges(),
      "adjacent hubs 0 and 1 joined to all of 2..5, path 2-3-4-5");
  add("F1", 6,
      {{0, 1}, {0, 2}, {0, 3}, {0, 5}, {1, 2}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}},
      "u, v, u1, u2, a, u4 from the four-block case where v meets the third block");
  add("F2", 6,
      {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 5}, {2, 3}, {3, 4}, {4, 5}},
      "u, v, u1, u2, u3, u4 from the four-block case where v misses the third block");
  {
    auto edges = r8_edges();
    edges.push_back({0, 5});
    edges.push_back({1, 7});
    add("F3", 8, std::move(edges), "R8 plus u-x12 (0-5) and v-x22 (1-7)");
  }
  {
    auto edges = r8_edges();
    edges.push_back({0, 6});
    edges.push_back({1, 7});
    add("F4", 8, std::move(edges), "R8 plus u-x21 (0-6) and v-x22 (1-7)");
  }
  add("K33", 6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}},
      "parts {0,1,2} and {3,4,5}");
  {
    auto edges = w6_plusplus_edges();
    edges.erase(std::find(edges.begin(), edges.end(), Edge{3, 4}));
    add("W6_PLUSPLUS_MINUS_Y3Y4", 6, std::move(edges), "W6_PLUSPLUS without edge 3-4");
  }
  return out;
}

const std::vector<CatalogEntry>& entries() {
  static const std::vector<CatalogEntry> all = make_entries();
  return all;
}

std::string upper(std::string_view s) {
  std::string out(s);
  for (char& c : out) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  return out;
}

}  // namespace

const CatalogEntry& catalog_entry(std::string_view name) {
  const std::string key = upper(name);
  for (const CatalogEntry& e : entries()) {
    if (e.name == key) return e;
  }
  std::string valid;
  for (const CatalogEntry& e : entries()) valid += (valid.empty() ? "" : ", ") + e.name;
  throw LookupError("unknown catalog graph '" + std::string(name) + "'; valid names: " + valid);
}

Graph catalog(std::string_view name) { return catalog_entry(name).graph; }

std::vector<std::string> catalog_names() {
  return {"K4", "C6BAR", "C6BAR_PLUS", "PETERSEN", "R8", "W6", "W6_PLUS",
          "W6_PLUSPLUS", "F1", "F2", "F3", "F4", "K33"};
}

std::vector<std::string> family_g_names() { return {"C6BAR_PLUS", "W6", "W6_PLUS", "W6_PLUSPLUS"}; }

std::vector<std::string> thm11_exception_names() { return {"K4", "C6BAR", "R8", "PETERSEN"}; }

}  // namespace mcg
