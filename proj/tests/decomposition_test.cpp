#include <gtest/gtest.h>

#include <random>

#include "cutscope/decomposition.hpp"
#include "oracles.hpp"

using namespace cutscope;

TEST(MinimalPrimes, SingleEdgeAndTriangle) {
  const auto k2 = minimal_primes(cut_ideal(complete(2)));
  ASSERT_EQ(k2.size(), 1u);
  EXPECT_EQ(k2[0].names(), (std::vector<std::string>{"s1", "t1"}));
  const auto c3 = minimal_primes(cut_ideal(cycle(3)));
  EXPECT_EQ(height(c3), 2u);
  EXPECT_EQ(c3.front().names(), (std::vector<std::string>{"s1", "t1"}));
}

TEST(MinimalPrimes, MatchBruteForceTransversals) {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = random_graph(rng, 5);
    const MonomialIdeal I = cut_ideal(g);
    std::set<std::uint64_t> ours;
    for (const auto& p : minimal_primes(I)) {
      std::uint64_t mask = 0;
      for (const auto& v : p.vars) mask |= std::uint64_t{1} << v.slot();
      ours.insert(mask);
    }
    EXPECT_EQ(ours, oracle::minimal_transversals(oracle::as_set(I.gens()))) << describe(g);
  }
}

TEST(MinimalPrimes, RejectsNonSquarefree) {
  EXPECT_THROW(minimal_primes(power(cut_ideal(complete(2)), 2)), Error);
  EXPECT_THROW(height({}), Error);
}

TEST(Decompose, DimensionConventions) {
  const Decomposition d = decompose(cycle(4));
  EXPECT_EQ(d.height, 2u);
  EXPECT_EQ(d.dim_edge_ring, 6);
  EXPECT_EQ(d.dim_vertex_ring, 6);
  const Decomposition k4 = decompose(complete(4));
  EXPECT_EQ(k4.dim_edge_ring, 10);
  EXPECT_EQ(k4.dim_vertex_ring, 6);
}

TEST(Decompose, PrimesOfCliqueSumsAreUnions) {
  const std::vector<Graph> parts{complete(2), complete(3), path(3)};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      EXPECT_TRUE(dim_formula_check({a, b}, {VertexPairing::disjoint()}));
      EXPECT_TRUE(dim_formula_check({a, b}, {VertexPairing::glue(1, 1)}));
    }
  EXPECT_TRUE(dim_formula_check({complete(2), cycle(3), path(3)},
                                {VertexPairing::glue(2, 1), VertexPairing::glue(4, 2)}));
}

TEST(Decompose, MalformedDecompositions) {
  EXPECT_THROW(dim_formula_report({complete(2), complete(2)}, {}), Error);
  EXPECT_THROW(dim_formula_report({complete(3), complete(3)}, {VertexPairing{{{1, 1}, {2, 2}}}}), Error);
  EXPECT_THROW(dim_formula_report({}, {}), Error);
}
