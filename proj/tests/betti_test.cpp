#include <gtest/gtest.h>

#include <random>

#include "cutscope/betti.hpp"
#include "cutscope/cut.hpp"
#include "oracles.hpp"

using namespace cutscope;

namespace {

std::map<std::pair<int, int>, std::uint64_t> koszul(const MonomialIdeal& I, std::int64_t p) {
  return oracle::koszul_betti(oracle::as_set(I.gens()), p);
}

BettiOptions with_prime(std::uint32_t p) {
  BettiOptions o;
  o.prime = p;
  return o;
}

MonomialIdeal random_ideal(std::mt19937& rng, int edges, int count, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<Monomial> gens;
  while (static_cast<int>(gens.size()) < count) {
    std::vector<Exponent> v(2 * static_cast<std::size_t>(edges));
    for (auto& x : v) x = static_cast<Exponent>(e(rng));
    Monomial m = Monomial::from_exponents(v);
    if (!m.is_unit()) gens.push_back(std::move(m));
  }
  return MonomialIdeal::minimalize(edges, std::move(gens));
}

}  // namespace

TEST(Betti, TriangleTable) {
  const BettiTable t = betti(cut_ideal(cycle(3)));
  EXPECT_EQ(t.at(0, 3), 4u);
  EXPECT_EQ(t.at(1, 5), 6u);
  EXPECT_EQ(t.at(2, 6), 3u);
  EXPECT_EQ(t.entries().size(), 3u);
  EXPECT_EQ(poincare(t).to_string(), "3x^2y^6 + 6xy^5 + 4y^3");
  EXPECT_EQ(pd(t), 2);
  EXPECT_EQ(reg(t), 4);
}

TEST(Betti, SingleEdge) {
  const BettiTable t = betti(cut_ideal(complete(2)));
  EXPECT_EQ(t.at(0, 1), 2u);
  EXPECT_EQ(t.at(1, 2), 1u);
  EXPECT_EQ(t.entries().size(), 2u);
}

TEST(Betti, CutIdealsMatchKoszulOracle) {
  const std::vector<Graph> graphs{cycle(3), cycle(4), path(4), complete(4),
                                  clique_sum(complete(2), complete(3), VertexPairing::glue(2, 1)),
                                  Graph(4, {{1, 2}, {1, 3}, {1, 4}})};
  for (std::uint32_t p : {2u, 3u, 32003u})
    for (const auto& g : graphs) {
      const MonomialIdeal I = cut_ideal(g);
      EXPECT_EQ(betti(I, with_prime(p)).entries(), koszul(I, p)) << "p = " << p << ", m = " << g.edge_count();
    }
}

TEST(Betti, RandomIdealsMatchKoszulOracle) {
  std::mt19937 rng(29);
  for (int trial = 0; trial < 60; ++trial) {
    const bool squarefree = trial % 2 == 0;
    const MonomialIdeal I = random_ideal(rng, squarefree ? 3 : 2, 6, squarefree ? 1 : 2);
    for (std::uint32_t p : {2u, 32003u}) EXPECT_EQ(betti(I, with_prime(p)).entries(), koszul(I, p));
  }
}

TEST(Betti, PowersMatchKoszulOracle) {
  const MonomialIdeal k2 = cut_ideal(complete(2));
  for (int k = 2; k <= 4; ++k) EXPECT_EQ(betti(power(k2, k)).entries(), koszul(power(k2, k), 32003));
  const MonomialIdeal p3 = cut_ideal(path(3));
  EXPECT_EQ(betti(power(p3, 2)).entries(), koszul(power(p3, 2), 32003));
}

TEST(Betti, EulerCharacteristicIsOne) {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 40; ++trial) EXPECT_EQ(betti(random_ideal(rng, 3, 7, 2)).euler_characteristic(), 1);
  EXPECT_EQ(betti(cut_ideal(cycle(5))).euler_characteristic(), 1);
}

TEST(Betti, ThreadCountDoesNotChangeResult) {
  BettiOptions threaded;
  threaded.par = Parallelism{4};
  const MonomialIdeal I = cut_ideal(cycle(5));
  EXPECT_EQ(betti(I).entries(), betti(I, threaded).entries());
}

TEST(Betti, BudgetsRaiseResourceExhausted) {
  BettiOptions tight;
  tight.element_budget = 10;
  try {
    betti(cut_ideal(cycle(4)), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::resource_exhausted);
  }
  BettiOptions few_chains;
  few_chains.chain_budget = 20;
  EXPECT_THROW(betti(cut_ideal(cycle(5)), few_chains), Error);
}

TEST(Betti, RejectsNonPrimeField) {
  EXPECT_THROW(betti(cut_ideal(complete(2)), with_prime(4)), Error);
  EXPECT_THROW(betti(cut_ideal(complete(2)), with_prime(1)), Error);
}

TEST(Betti, LinearResolutionCheck) {
  const BettiTable t = betti(cut_ideal(complete(2)));
  EXPECT_TRUE(linear_resolution_check(t, 1));
  EXPECT_FALSE(linear_resolution_check(betti(cut_ideal(cycle(3))), 3));
  BettiTable mixed;
  mixed.add(0, 2, 1);
  mixed.add(0, 3, 1);
  EXPECT_THROW(linear_resolution_check(mixed, 2), Error);
}

TEST(Betti, EmptyTableHasNoInvariants) {
  BettiTable empty;
  EXPECT_THROW(pd(empty), Error);
  EXPECT_THROW(reg(empty), Error);
}

TEST(Poincare, ProductAndFormatting) {
  const BivariatePoly a = BivariatePoly::monomial(2, 0, 1) + BivariatePoly::monomial(1, 1, 2);
  EXPECT_EQ(a.to_string(), "xy^2 + 2y");
  EXPECT_EQ((a * a).to_string(), "x^2y^4 + 4xy^3 + 4y^2");
  EXPECT_EQ(BivariatePoly::one().to_string(), "1");
  EXPECT_EQ(a * BivariatePoly::one(), a);
}

TEST(Betti, AcceptanceInputsAgreeAcrossCharacteristics) {
  std::vector<MonomialIdeal> inputs{cut_ideal(cycle(3)), cut_ideal(cycle(4)), cut_ideal(cycle(5)),
                                    cut_ideal(clique_sum(cycle(3), cycle(3), VertexPairing::glue(1, 1))),
                                    cut_ideal(path(4)), L_ideal(4), L_ideal(5)};
  for (const auto& I : inputs) {
    const BettiTable ref = betti(I, with_prime(32003));
    EXPECT_TRUE(betti(I, with_prime(2)).same_entries(ref));
    EXPECT_TRUE(betti(I, with_prime(3)).same_entries(ref));
  }
}
