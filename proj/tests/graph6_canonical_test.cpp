#include <gtest/gtest.h>

#include <map>
#include <numeric>
#include <random>
#include <set>

#include "mcg/canonical.hpp"
#include "mcg/catalog.hpp"
#include "mcg/graph6.hpp"
#include "oracles.hpp"
#include "test_util.hpp"

namespace mcg {
namespace {

// Expected strings were produced with networkx's graph6 writer.
TEST(Graph6, ParseReferenceStrings) {
  const Graph one = parse_graph6("@");
  EXPECT_EQ(one.order(), 1);
  EXPECT_EQ(one.size(), 0);

  const Graph k2 = parse_graph6("A_");
  EXPECT_EQ(k2.order(), 2);
  ASSERT_EQ(k2.size(), 1);
  EXPECT_EQ(k2.edge(0), (Edge{0, 1}));

  const Graph k4 = parse_graph6("C~");
  EXPECT_EQ(k4.order(), 4);
  EXPECT_EQ(k4.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}}));
  EXPECT_EQ(parse_graph6("?").order(), 0);
}

TEST(Graph6, EncodeReferenceStrings) {
  EXPECT_EQ(to_graph6(catalog("K4")), "C~");
  EXPECT_EQ(to_graph6(Graph(1, {})), "@");
  EXPECT_EQ(to_graph6(catalog("PETERSEN")), "IheA@GUAo");
  EXPECT_EQ(to_graph6(catalog("W6")), "E|fG");
}

TEST(Graph6, RejectsMultigraph) {
  std::vector<Edge> edges = catalog("C6BAR").edges();
  edges.push_back(edges.front());
  EXPECT_THROW(to_graph6(Graph(6, edges)), SerializationError);
}

TEST(Graph6, ParseErrorsCarryOffsets) {
  try {
    parse_graph6("C~ ");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
  try {
    parse_graph6("C");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 1u);
  }
  EXPECT_THROW(parse_graph6("A~"), ParseError);   // padding bits set
  EXPECT_THROW(parse_graph6(""), ParseError);
  EXPECT_THROW(parse_graph6("C\x01"), ParseError);
  EXPECT_THROW(parse_graph6("garbage"), ParseError);
}

TEST(Graph6, HeaderAndNewlineAccepted) {
  EXPECT_EQ(parse_graph6(">>graph6<<C~\n"), catalog("K4"));
}

TEST(Graph6, LongFormHeader) {
  std::mt19937_64 rng(5);
  const Graph g = graph_of(63, oracle::random_graph(63, 0.1, rng));
  const std::string text = to_graph6(g);
  EXPECT_EQ(text.substr(0, 4), "~??~");
  EXPECT_EQ(parse_graph6(text), underlying_simple(g));
}

TEST(Graph6, RoundTripAllSmallGraphs) {
  for (int n = 0; n <= 6; ++n) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << pairs); ++code) {
      const Graph g = graph_of(n, oracle::labeled_graph(n, code));
      const Graph back = parse_graph6(to_graph6(g));
      ASSERT_EQ(back.order(), n);
      for (int v = 0; v < n; ++v) ASSERT_EQ(back.neighbors(v), g.neighbors(v));
    }
  }
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 3000; ++trial) {
    const int n = 7 + static_cast<int>(rng() % 4);
    const Graph g = graph_of(n, oracle::random_graph(n, 0.5, rng));
    const Graph back = parse_graph6(to_graph6(g));
    for (int v = 0; v < n; ++v) ASSERT_EQ(back.neighbors(v), g.neighbors(v));
  }
}

Graph random_relabel(const Graph& g, std::mt19937_64& rng) {
  std::vector<int> perm(static_cast<std::size_t>(g.order()));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return g.relabeled(perm);
}

TEST(Canonical, InvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  for (const std::string& name : catalog_names()) {
    const Graph g = catalog(name);
    const CanonicalForm base = canonical_form(g);
    for (int i = 0; i < 100; ++i) ASSERT_EQ(canonical_form(random_relabel(g, rng)), base) << name;
  }
}

TEST(Canonical, IgnoresMultiplicity) {
  const Contraction c = contract(catalog("K4"), mask_of({0, 1}));
  EXPECT_EQ(canonical_form(c.graph), canonical_form(Graph(3, {{0, 1}, {1, 2}, {0, 2}})));
}

TEST(Canonical, CanonicalGraphIsIsomorphic) {
  const Graph g = catalog("F3");
  const Graph c = canonical_graph(g);
  EXPECT_TRUE(oracle::brute_isomorphic(8, pairs_of(g), 8, pairs_of(c)));
  EXPECT_EQ(to_graph6(c), canonical_form(g).bytes);
}

TEST(Isomorphism, Examples) {
  EXPECT_TRUE(is_isomorphic(catalog("F2"), catalog("W6")));
  EXPECT_FALSE(is_isomorphic(catalog("K4"), catalog("K33")));
  std::vector<Edge> a = catalog("C6BAR").edges();
  std::vector<Edge> b = a;
  a.push_back({0, 4});
  b.push_back({1, 5});
  EXPECT_TRUE(is_isomorphic(Graph(6, a), Graph(6, b)));
  EXPECT_TRUE(oracle::brute_isomorphic(6, pairs_of(Graph(6, a)), 6, pairs_of(Graph(6, b))));
  EXPECT_TRUE(oracle::brute_isomorphic(6, pairs_of(catalog("F2")), 6, pairs_of(catalog("W6"))));
}

// Certificates agree with permutation search on every labeled graph with
// five vertices and on random pairs with six or seven.
TEST(Isomorphism, AgreesWithPermutationSearch) {
  std::map<std::string, std::string> brute_to_cert;
  for (std::uint64_t code = 0; code < (1u << 10); ++code) {
    const auto pairs = oracle::labeled_graph(5, code);
    const std::string brute = oracle::brute_canonical(5, pairs);
    const std::string cert = canonical_form(graph_of(5, pairs)).bytes;
    auto [it, inserted] = brute_to_cert.emplace(brute, cert);
    ASSERT_EQ(it->second, cert);
  }
  EXPECT_EQ(brute_to_cert.size(), 34u);
  std::set<std::string> certs;
  for (const auto& [b, c] : brute_to_cert) certs.insert(c);
  EXPECT_EQ(certs.size(), 34u);

  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 6 + static_cast<int>(rng() % 2);
    const auto p1 = oracle::random_graph(n, 0.5, rng);
    auto p2 = rng() % 2 ? pairs_of(random_relabel(graph_of(n, p1), rng)) : oracle::random_graph(n, 0.5, rng);
    ASSERT_EQ(is_isomorphic(graph_of(n, p1), graph_of(n, p2)), oracle::brute_isomorphic(n, p1, n, p2));
  }
}

TEST(Isomorphism, SymmetricGraphsStayFast) {
  // Complete and empty graphs exercise automorphism pruning.
  std::vector<Edge> k12;
  for (int j = 1; j < 12; ++j)
    for (int i = 0; i < j; ++i) k12.push_back({i, j});
  std::mt19937_64 rng(1);
  EXPECT_EQ(canonical_form(Graph(12, k12)), canonical_form(random_relabel(Graph(12, k12), rng)));
  EXPECT_EQ(canonical_form(Graph(16, {})).bytes, to_graph6(Graph(16, {})));
  EXPECT_TRUE(is_isomorphic(catalog("PETERSEN"), random_relabel(catalog("PETERSEN"), rng)));
}

TEST(Isomorphism, SameOrbit) {
  const Graph w6 = catalog("W6");
  EXPECT_TRUE(same_orbit(w6, 1, 3));
  EXPECT_FALSE(same_orbit(w6, 0, 1));
  const Graph f1 = catalog("F1");
  EXPECT_TRUE(same_orbit(f1, 4, 4));
}

}  // namespace
}  // namespace mcg
