#include <gtest/gtest.h>

#include <random>
#include <set>

#include "fixtures.hpp"
#include "scgraph/antimorphism.hpp"
#include "scgraph/constructions.hpp"
#include "scgraph/errors.hpp"

namespace scgraph {
namespace {

std::set<std::string> codes_of(const std::vector<Graph>& graphs) {
  std::set<std::string> out;
  for (const Graph& g : graphs) out.insert(canonical_form(g).code);
  return out;
}

TEST(P4Construction, OnK1IsP4) {
  P4Construction c = p4_construction(Graph(1));
  EXPECT_EQ(c.graph, testing::path_p4());
  EXPECT_EQ(c.antimorphism, Permutation({1, 3, 0, 2}));
}

TEST(P4Construction, OnP4GivesSixteenVertexScGraph) {
  P4Construction c = p4_construction(testing::path_p4());
  EXPECT_EQ(c.graph.order(), 16);
  EXPECT_TRUE(is_antimorphism(c.graph, c.antimorphism));
  EXPECT_TRUE(find_antimorphism(c.graph));
}

TEST(P4Construction, DegreesAndAntimorphismOnRandomInputs) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 40; ++trial) {
    const int m = 1 + trial % 7;
    Graph g = testing::random_graph(m, 0.5, rng);
    P4Construction c = p4_construction(g);
    ASSERT_EQ(c.graph.order(), 4 * m);
    EXPECT_TRUE(is_antimorphism(c.graph, c.antimorphism));
    // Blocks [G1 | G3 | G4 | G2]: ends see one neighbouring block, middles two.
    for (int v = 0; v < m; ++v) {
      EXPECT_EQ(c.graph.degree(v), g.degree(v) + m);
      EXPECT_EQ(c.graph.degree(3 * m + v), g.degree(v) + m);
      EXPECT_EQ(c.graph.degree(m + v), (m - 1 - g.degree(v)) + 2 * m);
      EXPECT_EQ(c.graph.degree(2 * m + v), (m - 1 - g.degree(v)) + 2 * m);
    }
  }
}

TEST(JConstruction, Examples) {
  EXPECT_EQ(j_construction(Graph(1), Graph(1)), testing::path_p4());
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 20; ++trial) {
    Graph g = testing::random_graph(1 + trial % 4, 0.5, rng);
    Graph h = testing::random_graph(1 + trial % 3, 0.5, rng);
    Graph j = j_construction(g, h);
    EXPECT_EQ(j.order(), 2 * g.order() + 2 * h.order());
  }
  // With h = g the construction coincides with the P4-construction up to isomorphism.
  Graph p4 = testing::path_p4();
  EXPECT_TRUE(are_isomorphic(j_construction(p4, p4), p4_construction(p4).graph));
}

TEST(CycleTypes, SachsRingelLists) {
  EXPECT_EQ(sachs_ringel_cycle_types(4), (std::vector<std::vector<int>>{{4}}));
  EXPECT_EQ(sachs_ringel_cycle_types(5), (std::vector<std::vector<int>>{{4, 1}}));
  EXPECT_EQ(sachs_ringel_cycle_types(8).size(), 2U);
  EXPECT_EQ(sachs_ringel_cycle_types(12).size(), 3U);
  for (int n : {2, 3, 6, 7, 10, 11}) EXPECT_TRUE(sachs_ringel_cycle_types(n).empty());
}

TEST(PairOrbits, EvenLengthsAndCover) {
  for (int n = 4; n <= 13; ++n)
    for (const auto& type : sachs_ringel_cycle_types(n)) {
      Permutation sigma = representative_permutation(type);
      auto orbits = pair_orbits(sigma);
      std::size_t pairs = 0;
      for (const auto& orbit : orbits) {
        EXPECT_EQ(orbit.size() % 2, 0U);
        pairs += orbit.size();
      }
      EXPECT_EQ(pairs, static_cast<std::size_t>(n * (n - 1) / 2));
    }
}

TEST(OrbitChoice, DecodedGraphsAdmitSigma) {
  std::mt19937_64 rng(23);
  for (int n : {4, 5, 8, 9, 12}) {
    for (const auto& type : sachs_ringel_cycle_types(n)) {
      OrbitChoice choice{representative_permutation(type), {}, {}};
      choice.orbits = pair_orbits(choice.sigma);
      for (int trial = 0; trial < 10; ++trial) {
        choice.bits.assign(choice.orbits.size(), false);
        for (std::size_t i = 0; i < choice.bits.size(); ++i) choice.bits[i] = rng() & 1U;
        EXPECT_TRUE(is_antimorphism(choice.decode(), choice.sigma));
      }
    }
  }
}

TEST(Enumeration, KnownCounts) {
  EXPECT_EQ(enumerate_sc_graphs(1).size(), 1U);
  EXPECT_EQ(enumerate_sc_graphs(4).size(), 1U);
  EXPECT_EQ(enumerate_sc_graphs(5).size(), 2U);
  EXPECT_EQ(enumerate_sc_graphs(8).size(), 10U);
  EXPECT_EQ(enumerate_sc_graphs(9).size(), 36U);
  for (int n : {2, 3, 6, 7, 10, 11}) EXPECT_TRUE(enumerate_sc_graphs(n).empty());
}

TEST(Enumeration, MatchesBruteForceOnSmallOrders) {
  for (int n : {1, 4, 5}) {
    auto brute = testing::brute_sc_classes(n);
    auto listed = enumerate_sc_graphs(n);
    ASSERT_EQ(brute.size(), listed.size());
    EXPECT_EQ(codes_of(brute), codes_of(listed));
  }
}

TEST(Enumeration, PairwiseNonIsomorphicAndSc) {
  auto graphs = enumerate_sc_graphs(9);
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    EXPECT_TRUE(testing::brute_is_sc(graphs[i]));
    for (std::size_t j = i + 1; j < graphs.size(); ++j) EXPECT_FALSE(find_isomorphism(graphs[i], graphs[j]));
  }
}

TEST(Enumeration, ContainsConstructions) {
  auto eight = codes_of(enumerate_sc_graphs(8));
  EXPECT_TRUE(eight.count(canonical_form(p4_construction(Graph(2)).graph).code));
  EXPECT_TRUE(eight.count(canonical_form(p4_construction(Graph(2, {{0, 1}})).graph).code));
  EXPECT_TRUE(codes_of(enumerate_sc_graphs(4)).count(canonical_form(p4_construction(Graph(1)).graph).code));
}

TEST(Enumeration, TriangleFreeMembers) {
  std::set<std::string> found;
  for (int n = 1; n <= 9; ++n)
    for (const Graph& g : enumerate_sc_graphs(n))
      if (!testing::has_triangle(g)) found.insert(canonical_form(g).code);
  EXPECT_EQ(found, codes_of({Graph(1), testing::path_p4(), testing::cycle_c5()}));
}

TEST(Enumeration, DeterministicAcrossJobs) {
  EXPECT_EQ(enumerate_sc_graphs(9, {13, 1}), enumerate_sc_graphs(9, {13, 3}));
}

TEST(Enumeration, GuardOnOrder) {
  EXPECT_THROW(enumerate_sc_graphs(16), GuardExceeded);
  EXPECT_THROW(enumerate_sc_graphs(9, {8, 1}), GuardExceeded);
}

}  // namespace
}  // namespace scgraph
