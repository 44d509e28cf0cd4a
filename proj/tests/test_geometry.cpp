#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "essat/constructions.hpp"
#include "essat/errors.hpp"
#include "essat/geometry.hpp"
#include "oracles.hpp"

using namespace essat;

namespace {

PointSet pts(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> v;
  for (auto [x, y] : xy) v.push_back(make_point(x, y));
  return PointSet(v);
}

// Distinct intersection points of spanned lines, points of P included, must
// have pairwise distinct x.
bool very_generic_by_enumeration(const PointSet& P) {
  if (!oracle::generic(P.points())) return false;
  std::set<Point> where(P.begin(), P.end());
  const int m = static_cast<int>(P.size());
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = 0; c < m; ++c) {
        for (int d = c + 1; d < m; ++d) {
          const Point &p1 = P[a], &p2 = P[b], &p3 = P[c], &p4 = P[d];
          const Rational den = (p1.x - p2.x) * (p3.y - p4.y) - (p1.y - p2.y) * (p3.x - p4.x);
          if (den == 0) continue;
          const Rational t1 = p1.x * p2.y - p1.y * p2.x, t2 = p3.x * p4.y - p3.y * p4.x;
          where.insert({(t1 * (p3.x - p4.x) - (p1.x - p2.x) * t2) / den,
                        (t1 * (p3.y - p4.y) - (p1.y - p2.y) * t2) / den});
        }
      }
    }
  }
  std::set<Rational> xs;
  for (const auto& q : where) {
    if (!xs.insert(q.x).second) return false;
  }
  return true;
}

}  // namespace

TEST(Orientation, SignOfTurn) {
  EXPECT_EQ(orientation(make_point(0, 0), make_point(1, 0), make_point(2, 1)), Orientation::CCW);
  EXPECT_EQ(orientation(make_point(0, 0), make_point(1, 0), make_point(2, -1)), Orientation::CW);
  EXPECT_EQ(orientation(make_point(0, 0), make_point(1, 1), make_point(3, 3)), Orientation::COLLINEAR);
}

TEST(PointSet, SortsAndRejectsDuplicates) {
  const auto P = pts({{3, 1}, {0, 5}, {1, -2}});
  EXPECT_EQ(P[0], make_point(0, 5));
  EXPECT_EQ(P[2], make_point(3, 1));
  EXPECT_THROW(pts({{1, 1}, {1, 1}}), NonGenericError);
}

TEST(PointSet, GenericityChecks) {
  EXPECT_TRUE(is_generic(pts({{0, 0}, {1, 2}, {2, 1}})));
  EXPECT_FALSE(is_generic(pts({{0, 0}, {1, 1}, {2, 2}})));
  EXPECT_FALSE(is_generic(pts({{0, 0}, {0, 1}, {2, 5}})));
  EXPECT_TRUE(in_general_position(pts({{0, 0}, {0, 1}, {2, 5}})));
  EXPECT_THROW(PointSet::generic({make_point(0, 0), make_point(0, 1)}), NonGenericError);
  EXPECT_THROW(require_general_position(pts({{0, 0}, {1, 1}, {5, 5}})), NonGenericError);
}

TEST(PointSet, EightPointSetIsNotVeryGeneric) {
  // Two pairs of spanned lines cross at x = 65/3 with different y.
  const auto P = base_cupcap_saturated(4, 5);
  EXPECT_TRUE(is_generic(P));
  EXPECT_FALSE(is_very_generic(P));
  EXPECT_FALSE(very_generic_by_enumeration(P));
  EXPECT_TRUE(is_very_generic(very_generic_repair(P)));
}

TEST(PointSet, VeryGenericMatchesEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 300; ++trial) {
    const int m = std::uniform_int_distribution<int>(1, 7)(rng);
    const auto P = oracle::random_generic(m, rng, trial % 2 ? 4 : 30);
    EXPECT_EQ(is_very_generic(P), very_generic_by_enumeration(P));
  }
}

TEST(Chains, CupsAndCapsOfAParabola) {
  const auto up = pts({{0, 0}, {1, 1}, {2, 4}, {3, 9}, {4, 16}});
  EXPECT_EQ(longest_cup(up).size, 5);
  EXPECT_EQ(longest_cap(up).size, 2);
  EXPECT_TRUE(is_cup(up.points()));
  EXPECT_FALSE(is_cap(up.points()));
  EXPECT_FALSE(is_cupcap_free(up, 5, 3));
  EXPECT_TRUE(is_cupcap_free(up, 6, 3));
}

TEST(Chains, EightPointSetCounts) {
  const auto P = base_cupcap_saturated(4, 5);
  EXPECT_EQ(longest_cup(P).size, 3);
  EXPECT_EQ(longest_cap(P).size, 4);
  EXPECT_EQ(largest_convex_subset(P).size, 5);
  EXPECT_EQ(oracle::largest_convex(P), 5);
}

TEST(Chains, WitnessesAreChains) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const auto P = oracle::random_generic(8, rng);
    for (bool cup : {true, false}) {
      const auto c = cup ? longest_cup(P) : longest_cap(P);
      ASSERT_EQ(static_cast<int>(c.indices.size()), c.size);
      std::vector<Point> w;
      for (int i : c.indices) w.push_back(P[i]);
      EXPECT_TRUE(cup ? is_cup(w) : is_cap(w));
    }
    const auto g = largest_convex_subset(P);
    std::vector<Point> w;
    for (int i : g.indices) w.push_back(P[i]);
    EXPECT_TRUE(in_convex_position(w));
    EXPECT_EQ(static_cast<int>(w.size()), g.size);
  }
}

TEST(Chains, ThroughPointUsesIndexM) {
  const auto P = pts({{0, 0}, {2, 0}, {1, 3}});
  const auto c = largest_convex_subset_through(P, make_point(1, -1));
  EXPECT_EQ(c.size, 4);
  EXPECT_NE(std::find(c.indices.begin(), c.indices.end(), 3), c.indices.end());
}

TEST(Chains, NonGenericInputRejected) {
  EXPECT_THROW(longest_cup(pts({{0, 0}, {1, 1}, {2, 2}})), NonGenericError);
}

TEST(Shadow, OpenInterval) {
  const auto P = pts({{0, 0}, {1, 1}, {2, 4}});
  const auto s = cup_shadow(P, {0, 2});
  EXPECT_EQ(s.lo, 0);
  EXPECT_EQ(s.hi, 2);
  EXPECT_THROW(cup_shadow(P, {0}), PreconditionError);
  EXPECT_THROW(cup_shadow(P, {2, 0}), PreconditionError);
}

TEST(Line, CanonicalForm) {
  const auto l = Line::through(make_point(0, 0), make_point(2, 4));
  EXPECT_EQ(l, Line::through(make_point(1, 2), make_point(3, 6)));
  EXPECT_EQ(l.y_at(Rational(5)), 10);
  EXPECT_EQ(l.side(make_point(0, 1)), -l.side(make_point(0, -1)));
  EXPECT_TRUE(Line::vertical(Rational(3)).is_vertical());
  EXPECT_EQ(Line::through(make_point(3, 0), make_point(3, 5)), Line::vertical(Rational(3)));
}

TEST(Line, Intersection) {
  Point p;
  ASSERT_TRUE(intersect(Line::through(make_point(0, 0), make_point(1, 1)),
                        Line::through(make_point(0, 1), make_point(1, 0)), p));
  EXPECT_EQ(p, (Point{Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(intersect(Line::through(make_point(0, 0), make_point(1, 1)),
                         Line::through(make_point(0, 1), make_point(1, 2)), p));
}

TEST(PointIO, RoundTripAndComments) {
  std::istringstream in("# header\n1/2 -3\n\n  4 5/7  # trailing\n");
  const auto P = read_points(in);
  ASSERT_EQ(P.size(), 2u);
  EXPECT_EQ(P[0], (Point{Rational(1, 2), Rational(-3)}));
  std::ostringstream out;
  write_points(out, P);
  std::istringstream back(out.str());
  EXPECT_EQ(read_points(back), P);
}

TEST(PointIO, ErrorsCarryLineNumbers) {
  std::istringstream in("0 0\n1\n");
  try {
    read_points(in);
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  std::istringstream extra("0 0 0\n");
  EXPECT_THROW(read_points(extra), ParseError);
  EXPECT_THROW(load_points("/nonexistent/file.pts"), ParseError);
}
