#include <gtest/gtest.h>

#include <random>

#include "cutscope/monomial.hpp"

using namespace cutscope;

TEST(Variable, SlotLayoutInterleavesLetters) {
  EXPECT_EQ((Variable{1, Letter::s}).slot(), 0u);
  EXPECT_EQ((Variable{1, Letter::t}).slot(), 1u);
  EXPECT_EQ((Variable{3, Letter::t}).slot(), 5u);
  EXPECT_EQ(Variable::from_slot(4).name(), "s3");
}

TEST(Monomial, TextFormRoundTrips) {
  const Monomial m = Monomial::parse("s1*t2^3", 2);
  EXPECT_EQ(m.degree(), 4);
  EXPECT_EQ(m.to_string(), "s1*t2^3");
  EXPECT_EQ(Monomial(3).to_string(), "1");
  EXPECT_EQ(Monomial::parse("1", 3), Monomial(3));
  EXPECT_EQ(Monomial::parse("t2*s1*s1", 2).to_string(), "s1^2*t2");
}

TEST(Monomial, ParseRejectsGarbage) {
  for (const char* bad : {"", "x1", "s0", "s3", "s1^0", "s1**t1", "s1^", "s"}) {
    EXPECT_THROW(Monomial::parse(bad, 2), Error) << bad;
  }
}

TEST(Monomial, ArithmeticIdentities) {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Exponent> a(6), b(6);
    for (auto& x : a) x = static_cast<Exponent>(e(rng));
    for (auto& x : b) x = static_cast<Exponent>(e(rng));
    const Monomial ma = Monomial::from_exponents(a), mb = Monomial::from_exponents(b);
    const Monomial l = lcm(ma, mb);
    EXPECT_TRUE(ma.divides(l));
    EXPECT_TRUE(mb.divides(l));
    EXPECT_EQ(colon(ma, mb) * mb, l);
    EXPECT_EQ((ma * mb).degree(), ma.degree() + mb.degree());
    EXPECT_EQ(ma.swapped(2).swapped(2), ma);
  }
}

TEST(Monomial, RingMismatchAndOverflow) {
  EXPECT_THROW((void)(Monomial(1) * Monomial(2)), Error);
  const Monomial big = Monomial::from_exponents({200, 0});
  try {
    (void)(big * big);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::invalid_exponent);
  }
}

TEST(Monomial, CanonicalOrderPutsS1First) {
  CanonicalLess less;
  const Monomial s1 = Monomial::parse("s1", 2), t1 = Monomial::parse("t1", 2), s2 = Monomial::parse("s2", 2);
  EXPECT_TRUE(less(s1, t1));
  EXPECT_TRUE(less(t1, s2));
  EXPECT_TRUE(less(s2, Monomial::parse("s1*s2", 2)));
  EXPECT_FALSE(less(s1, s1));
}

TEST(Monomial, EmbeddingShiftsSlots) {
  const Monomial m = Monomial::parse("s1*t2", 2).embedded(3, 5);
  EXPECT_EQ(m.to_string(), "s4*t5");
  EXPECT_THROW(m.embedded(1, 5), Error);
}
