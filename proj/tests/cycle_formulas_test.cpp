#include <gtest/gtest.h>

#include "cutscope/betti.hpp"
#include "cutscope/cut.hpp"
#include "cutscope/cycle_formulas.hpp"
#include "oracles.hpp"

using namespace cutscope;

namespace {

const LexConvention both[] = {LexConvention::larger_element_is_greater, LexConvention::smaller_element_is_greater};

BaseTriple oracle_base() {
  const auto t = betti(cut_ideal(cycle(3))).totals();
  return {t[0], t[1], t[2]};
}

}  // namespace

TEST(QuotientOrder, IsAStrictTotalOrder) {
  for (auto conv : both)
    for (int n = 4; n <= 6; ++n) {
      const auto order = quotient_order(n, conv);
      ASSERT_EQ(order.size(), static_cast<std::size_t>(n - 1) << (n - 2));
      for (std::size_t a = 0; a < order.size(); ++a) {
        EXPECT_FALSE(quotient_precedes(order[a], order[a], conv));
        for (std::size_t b = a + 1; b < order.size(); ++b) {
          EXPECT_TRUE(quotient_precedes(order[a], order[b], conv));
          EXPECT_FALSE(quotient_precedes(order[b], order[a], conv));
        }
      }
    }
}

TEST(QuotientOrder, StartsWithTheFullSet) {
  const auto order = quotient_order(5);
  EXPECT_EQ(order.front().subset, 0b1111u);
  EXPECT_EQ(order.front().pivot, 1);
  EXPECT_EQ(order.front().monomial().to_string(), "s1*t1*s2*s3*s4");
}

TEST(QuotientOrder, DescriptionMatchesIntersection) {
  for (int n = 4; n <= 7; ++n) EXPECT_TRUE(equals(L_ideal_by_description(n), L_ideal(n)));
}

TEST(LinearQuotients, HoldUnderEitherLexConvention) {
  for (auto conv : both)
    for (int n = 4; n <= 6; ++n) EXPECT_TRUE(quotient_colon_check(n, conv)) << n;
}

TEST(LinearQuotients, ColonSizesAreTheRValues) {
  for (int n = 4; n <= 6; ++n) {
    const auto order = quotient_order(n);
    const auto measured = measured_quotient_exponents(n);
    ASSERT_EQ(measured.size(), order.size());
    for (std::size_t k = 0; k < order.size(); ++k)
      EXPECT_EQ(measured[k], r_value(n, order[k].subset, order[k].pivot));
  }
}

TEST(RValue, Examples) {
  EXPECT_EQ(r_value(5, 0b1111, 1), 0);
  EXPECT_EQ(r_value(5, 0b1111, 4), 3);
  EXPECT_EQ(r_value(5, 0b0001, 1), 3);
  EXPECT_THROW(r_value(5, 0b0001, 2), Error);
  EXPECT_THROW(r_value(5, 0, 1), Error);
  EXPECT_THROW(r_value(5, 0b10000, 5), Error);
}

TEST(Lambda, ZerothIsGeneratorCount) {
  for (int n = 4; n <= 10; ++n) EXPECT_EQ(lambda_betti(n, 0), static_cast<std::uint64_t>(n - 1) << (n - 2));
  EXPECT_EQ(lambda_betti(5, -1), 0u);
}

TEST(Lambda, MatchesHomologyOfL) {
  for (int n = 4; n <= 5; ++n) {
    const MonomialIdeal L = L_ideal(n);
    EXPECT_TRUE(betti(L).same_entries(lambda_table(n)));
    EXPECT_TRUE(lambda_table_measured(n).same_entries(lambda_table(n)));
  }
  EXPECT_EQ(lambda_table(4).entries(), oracle::koszul_betti(oracle::as_set(L_ideal(4).gens()), 2));
}

TEST(Recursion, MatchesOracle) {
  for (int n = 4; n <= 5; ++n) {
    const BettiTable oracle_table = betti(cut_ideal(cycle(n)));
    EXPECT_TRUE(oracle_table.same_entries(betti_recursion_graded(n)));
    EXPECT_TRUE(oracle_table.same_entries(betti_recursion_graded(n, {}, LambdaSource::measured)));
    EXPECT_EQ(oracle_table.totals(), betti_recursion(n));
  }
  EXPECT_THROW(betti_recursion(3), Error);
}

TEST(ClosedForm, UnrollsTheRecursion) {
  const BaseTriple base = oracle_base();
  const BettiTable c3 = betti(cut_ideal(cycle(3)));
  for (int n = 4; n <= 9; ++n) {
    EXPECT_EQ(betti_closed_totals(n, base), betti_recursion(n));
    EXPECT_TRUE(betti_closed_graded(n, base, c3).same_entries(betti_recursion_graded(n)));
  }
}

TEST(ClosedForm, PrintedVariantsDisagreeWithOracle) {
  const auto oracle4 = betti(cut_ideal(cycle(4))).totals();
  EXPECT_NE(betti_closed_totals(4, {4, 6, 4}), oracle4);
  EXPECT_NE(betti_closed_totals(4, oracle_base(), ClosedFormSum::from_three), oracle4);
  EXPECT_EQ(oracle_base()[2], 3u);
}

TEST(Cycles, LabeledCycleDetection) {
  EXPECT_TRUE(is_labeled_cycle(cycle(5)));
  EXPECT_FALSE(is_labeled_cycle(path(5)));
  EXPECT_FALSE(is_labeled_cycle(Graph(4, {{1, 2}, {2, 3}, {1, 4}, {3, 4}})));
}

TEST(Binomial, SmallValues) {
  EXPECT_EQ(binomial(5, 2), 10u);
  EXPECT_EQ(binomial(5, 0), 1u);
  EXPECT_EQ(binomial(3, 5), 0u);
  EXPECT_EQ(binomial(3, -1), 0u);
}
