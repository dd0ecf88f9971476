#include <gtest/gtest.h>

#include <random>

#include "generators.hpp"
#include "mcg/catalog.hpp"
#include "mcg/edge_class.hpp"
#include "mcg/generate.hpp"
#include "mcg/matching.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace mcg {
namespace {

TEST(Removable, ReferenceEdges) {
  const Graph plus = catalog("C6BAR_PLUS");
  // Vertex 2 lies on triangle 0-1-2 and its only other neighbour is 5.
  EXPECT_FALSE(is_removable(plus, edge_id(plus, 2, 5)));
  const Graph w6 = catalog("W6");
  for (int i = 1; i <= 5; ++i) {
    EXPECT_FALSE(is_removable(w6, edge_id(w6, i, i % 5 + 1))) << "rim " << i;
    EXPECT_TRUE(is_removable(w6, edge_id(w6, 0, i))) << "spoke " << i;
  }
  EXPECT_THROW(is_removable(w6, 99), ArgumentError);
  EXPECT_THROW(is_removable(Graph(3, {{0, 1}, {1, 2}}), 0), PreconditionError);
}

TEST(BInvariant, ReferenceEdges) {
  const Graph wpp = catalog("W6_PLUSPLUS");
  EXPECT_FALSE(is_b_invariant(wpp, edge_id(wpp, 3, 4)));
  const Graph w6 = catalog("W6");
  EXPECT_TRUE(is_b_invariant(w6, edge_id(w6, 0, 1)));
  const Graph k4 = catalog("K4");
  for (int e = 0; e < k4.size(); ++e) EXPECT_FALSE(is_b_invariant(k4, e));
}

TEST(Solitary, ReferenceEdges) {
  const Graph k4 = catalog("K4");
  for (int e = 0; e < k4.size(); ++e) EXPECT_TRUE(is_solitary(k4, e));
  const Graph prism = catalog("C6BAR");
  for (auto [u, v] : {std::pair{0, 3}, {1, 4}, {2, 5}}) EXPECT_FALSE(is_solitary(prism, edge_id(prism, u, v)));
  const Graph wpp = catalog("W6_PLUSPLUS");
  EXPECT_TRUE(is_solitary(wpp, edge_id(wpp, 0, 1)));
}

TEST(ClassifyAll, FamilySummaries) {
  const EdgeClassReport w6 = classify_all(catalog("W6"));
  EXPECT_EQ(w6.summary.b_invariant, 5);
  EXPECT_EQ(w6.summary.b_invariant_and_solitary, 5);
  const Graph w6g = catalog("W6");
  for (int e : w6.b_invariant_edges()) EXPECT_TRUE(w6g.edge(e).touches(0));

  const EdgeClassReport plus = classify_all(catalog("C6BAR_PLUS"));
  EXPECT_EQ(plus.summary.b_invariant, 3);
  EXPECT_EQ(plus.summary.b_invariant_and_solitary, 3);
  EXPECT_EQ(plus.summary.solitary, 5);

  for (const char* name : {"W6_PLUS", "W6_PLUSPLUS"}) {
    const EdgeClassReport r = classify_all(catalog(name));
    EXPECT_EQ(r.summary.b_invariant, 5) << name;
    EXPECT_EQ(r.summary.b_invariant_and_solitary, 5) << name;
  }
}

TEST(ClassifyAll, KnownExceptionsHaveFewerThanTwo) {
  // Each has fewer than two b-invariant edges.
  EXPECT_EQ(classify_all(catalog("R8")).summary.b_invariant, 1);
  EXPECT_EQ(classify_all(catalog("PETERSEN")).summary.b_invariant, 0);
  EXPECT_EQ(classify_all(catalog("K4")).summary.removable, 0);
  EXPECT_EQ(classify_all(catalog("C6BAR")).summary.removable, 0);
}

TEST(EveryBInvariantSolitary, NamedGraphs) {
  for (const std::string& name : family_g_names()) EXPECT_TRUE(every_b_invariant_solitary(catalog(name))) << name;
  EXPECT_TRUE(every_b_invariant_solitary(catalog("K4")));
  // The prism has no removable edge at all, so the property holds vacuously.
  EXPECT_TRUE(every_b_invariant_solitary(catalog("C6BAR")));
  EXPECT_FALSE(every_b_invariant_solitary(catalog("F3")));
  EXPECT_FALSE(every_b_invariant_solitary(catalog("K33")));
}

// Edge verdicts against the definitions evaluated with oracle code: PM
// lists for solitary, DP for matching covered and lattice rank for b.
TEST(ClassifyAll, AgreesWithOracles) {
  std::mt19937_64 rng(79);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = gen::matching_covered_graph(10, rng);
    const int n = g.order();
    const auto pairs = pairs_of(g);
    const auto pms = oracle::pm_list_recursive(n, pairs);
    const int b = oracle::brick_count_by_rank(n, pairs);
    const EdgeClassReport r = classify_all(g);
    ASSERT_EQ(r.edges.size(), pairs.size());
    for (std::size_t e = 0; e < pairs.size(); ++e) {
      const EdgeClass& c = r.edges[e];
      int containing = 0;
      for (const auto& ids : pms) containing += std::count(ids.begin(), ids.end(), static_cast<int>(e));
      EXPECT_EQ(c.solitary, containing == 1);
      const auto minus = oracle::without(pairs, e);
      EXPECT_EQ(c.removable, oracle::matching_covered(n, minus));
      if (c.removable) {
        EXPECT_EQ(*c.b_invariant, oracle::brick_count_by_rank(n, minus) == b) << g.to_string() << " e=" << e;
      } else {
        EXPECT_FALSE(c.b_invariant.has_value());
      }
    }
  }
}

TEST(TriangleEdges, Examples) {
  EXPECT_TRUE(triangle_nonremovable_edges(catalog("PETERSEN")).empty());
  const Graph k4 = catalog("K4");
  const std::vector<int> k4_edges = triangle_nonremovable_edges(k4);
  EXPECT_EQ(k4_edges.size(), 6u);
  for (int e : k4_edges) EXPECT_FALSE(is_removable(k4, e));
  const Graph plus = catalog("C6BAR_PLUS");
  const std::vector<int> plus_edges = triangle_nonremovable_edges(plus);
  EXPECT_NE(std::find(plus_edges.begin(), plus_edges.end(), edge_id(plus, 2, 5)), plus_edges.end());
}

TEST(TriangleEdges, NonremovableOnSmallGraphs) {
  int checked = 0;
  for (int n = 4; n <= 7; ++n) {
    for (const Graph& g : generate_all_graphs(n, {true, 0})) {
      if (!is_matching_covered(g)) continue;
      for (int e : triangle_nonremovable_edges(g)) {
        ASSERT_FALSE(is_removable(g, e)) << g.to_string();
        ++checked;
      }
    }
  }
  EXPECT_GT(checked, 50);
}

// Every brick other than the four exceptions has at least two b-invariant
// edges; checked through order 6 here and further in the acceptance suite.
TEST(BInvariant, AtLeastTwoInSmallBricks) {
  std::vector<CanonicalForm> exceptions;
  for (const std::string& name : thm11_exception_names()) exceptions.push_back(canonical_form(catalog(name)));
  int bricks = 0;
  for (int n = 4; n <= 6; n += 2) {
    for (const Graph& g : generate_all_graphs(n, {true, 3})) {
      if (!is_brick(g)) continue;
      ++bricks;
      if (std::find(exceptions.begin(), exceptions.end(), canonical_form(g)) != exceptions.end()) continue;
      EXPECT_GE(classify_all(g).summary.b_invariant, 2) << g.to_string();
    }
  }
  EXPECT_GT(bricks, 5);
}

}  // namespace
}  // namespace mcg
