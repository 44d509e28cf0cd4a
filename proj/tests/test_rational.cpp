#include <gtest/gtest.h>

#include <random>

#include "essat/errors.hpp"
#include "essat/rational.hpp"

using namespace essat;

TEST(ParseRational, AcceptsIntegersAndFractions) {
  EXPECT_EQ(parse_rational("7"), Rational(7));
  EXPECT_EQ(parse_rational("-7"), Rational(-7));
  EXPECT_EQ(parse_rational("+7"), Rational(7));
  EXPECT_EQ(parse_rational("6/4"), Rational(3, 2));
  EXPECT_EQ(parse_rational("-10/4"), Rational(-5, 2));
  EXPECT_EQ(parse_rational("123456789012345678901234567890"),
            Rational(Integer("123456789012345678901234567890")));
}

TEST(ParseRational, RejectsMalformed) {
  for (const char* bad : {"", "-", "1.5", "1/", "/2", "1/-2", "1/+2", "a", "1/0", "1 2", "0x10"}) {
    EXPECT_THROW(parse_rational(bad), ParseError) << bad;
  }
}

TEST(RationalFormat, IntegersHaveNoDenominator) {
  EXPECT_EQ(to_string(Rational(4, 2)), "2");
  EXPECT_EQ(to_string(Rational(-3, 6)), "-1/2");
  EXPECT_EQ(to_string(parse_rational(to_string(Rational(22, 7)))), "22/7");
}

TEST(RationalRounding, FloorAndCeilTowardInfinities) {
  EXPECT_EQ(floor(Rational(7, 2)), 3);
  EXPECT_EQ(ceil(Rational(7, 2)), 4);
  EXPECT_EQ(floor(Rational(-7, 2)), -4);
  EXPECT_EQ(ceil(Rational(-7, 2)), -3);
  EXPECT_EQ(floor(Rational(5)), 5);
  EXPECT_EQ(ceil(Rational(-5)), -5);
}

TEST(RationalRounding, Midpoint) {
  EXPECT_EQ(midpoint(Rational(1), Rational(2)), Rational(3, 2));
  EXPECT_EQ(midpoint(Rational(-1, 3), Rational(1, 3)), Rational(0));
}

namespace {

// Smallest denominator first, then smallest absolute value.
Rational simplest_by_search(const Rational& lo, const Rational& hi) {
  for (long d = 1;; ++d) {
    Rational best;
    bool found = false;
    const Integer from = floor(lo * d), to = ceil(hi * d);
    for (Integer num = from; num <= to; ++num) {
      const Rational v(num, Integer(d));
      if (!(lo < v && v < hi)) continue;
      if (!found || abs(v) < abs(best)) best = v;
      found = true;
    }
    if (found) return best;
  }
}

}  // namespace

TEST(SimplestBetween, MatchesExhaustiveSearch) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<long> num(-60, 60), den(1, 13);
  for (int trial = 0; trial < 2000; ++trial) {
    Rational a(num(rng), den(rng)), b(num(rng), den(rng));
    a.canonicalize();
    b.canonicalize();
    if (a == b) continue;
    if (b < a) std::swap(a, b);
    const auto s = simplest_between(a, b);
    EXPECT_TRUE(a < s && s < b);
    EXPECT_EQ(s, simplest_by_search(a, b)) << a << " " << b;
  }
}

TEST(SimplestBetween, EmptyIntervalThrows) {
  EXPECT_THROW(simplest_between(Rational(1), Rational(1)), std::invalid_argument);
}
