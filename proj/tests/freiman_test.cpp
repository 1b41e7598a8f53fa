#include <gtest/gtest.h>

#include "cutscope/freiman.hpp"
#include "oracles.hpp"

using namespace cutscope;

TEST(Freiman, BoundAtSquareIsTheQuadraticFormula) {
  for (int ell = 2; ell <= 8; ++ell)
    for (std::uint64_t mu = 1; mu <= 20; ++mu)
      EXPECT_EQ(freiman_power_bound(ell, mu, 2),
                static_cast<std::int64_t>(ell * mu) - static_cast<std::int64_t>(binomial(ell, 2)));
  EXPECT_EQ(freiman_power_bound(5, 8, 1), 8);
}

TEST(Freiman, SingleEdgePowers) {
  const FreimanReport r = freiman_report(complete(2), 10);
  ASSERT_EQ(r.powers.size(), 10u);
  for (const auto& p : r.powers) {
    EXPECT_EQ(p.mu, static_cast<std::uint64_t>(p.k + 1));
    EXPECT_TRUE(p.attains_bound());
  }
  EXPECT_TRUE(r.freiman());
}

TEST(Freiman, ListedGraphsAttainTheBound) {
  for (const auto& named : listed_freiman_graphs()) {
    const FreimanReport r = freiman_report(named.graph, 4);
    EXPECT_EQ(r.ell, named.graph.edge_count() + 1);
    EXPECT_TRUE(r.freiman()) << named.name;
    for (const auto& p : r.powers) EXPECT_TRUE(p.attains_bound()) << named.name << " k=" << p.k;
  }
}

TEST(Freiman, SquareCountsMatchBruteForce) {
  for (const Graph& g : {cycle(4), complete(4), path(4), cycle(5), complete(3)}) {
    const auto gens = oracle::cut_generators(g);
    const FreimanReport r = freiman_report(g, 2);
    EXPECT_EQ(r.mu2, oracle::product(gens, gens).size());
  }
}

TEST(Freiman, RejectedGraphsHavePositiveDefect) {
  const FreimanReport k4 = freiman_report(complete(4), 2);
  EXPECT_EQ(k4.mu, 8u);
  EXPECT_EQ(k4.ell, 7);
  EXPECT_GT(k4.defect, 0);
  for (const Graph& g : {cycle(4), path(4), cycle(5)}) EXPECT_GT(freiman_report(g, 2).defect, 0);
}

TEST(Freiman, BudgetGivesPartialReport) {
  const FreimanReport r = freiman_report(complete(4), 3, 10);
  EXPECT_TRUE(r.partial);
  EXPECT_FALSE(r.freiman());
  EXPECT_EQ(r.powers.size(), 1u);
  EXPECT_THROW(freiman_report(complete(2), 1), Error);
}

TEST(Isomorphism, RecognisesRelabelings) {
  const Graph paw(4, {{3, 4}, {1, 3}, {1, 4}, {1, 2}});
  EXPECT_TRUE(isomorphic(paw, clique_sum(complete(2), complete(3), VertexPairing::glue(2, 1))));
  EXPECT_EQ(listed_name(paw), "K2#K3");
  EXPECT_FALSE(isomorphic(path(4), Graph(4, {{1, 2}, {1, 3}, {1, 4}})));
  EXPECT_EQ(listed_name(cycle(4)), std::nullopt);
}

TEST(Classification, FindsOnlyTheListedShapes) {
  const Classification c = classify_small(4, 4);
  EXPECT_FALSE(c.partial);
  EXPECT_GE(c.min_defect, 0);
  std::set<std::string> shapes;
  for (const auto& cg : c.freiman) {
    const auto name = listed_name(cg.graph);
    ASSERT_TRUE(name.has_value()) << describe(cg.graph);
    shapes.insert(*name);
  }
  EXPECT_EQ(shapes, (std::set<std::string>{"K2", "K3", "P3", "K2+K2", "K2#K3"}));
}

TEST(Classification, DeterministicAcrossThreads) {
  const Classification a = classify_small(4, 5);
  const Classification b = classify_small(4, 5, 2'000'000, Parallelism{4});
  ASSERT_EQ(a.freiman.size(), b.freiman.size());
  for (std::size_t k = 0; k < a.freiman.size(); ++k) EXPECT_EQ(a.freiman[k].graph, b.freiman[k].graph);
  EXPECT_EQ(a.examined, b.examined);
}
