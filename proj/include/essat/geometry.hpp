#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "essat/rational.hpp"

namespace essat {

struct Point {
  Rational x;
  Rational y;

  friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
  // Lexicographic by (x, y).
  friend bool operator<(const Point& a, const Point& b) {
    return a.x < b.x || (a.x == b.x && a.y < b.y);
  }
};

Point make_point(long x, long y);

enum class Orientation : int { CW = -1, COLLINEAR = 0, CCW = 1 };

// Sign of (b - a) x (c - b).
Orientation orientation(const Point& a, const Point& b, const Point& c);

// Points kept sorted lexicographically by (x, y). Duplicates are rejected.
// Genericity is a property checked on demand, not an invariant, so that the
// n-gon verifier can accept sets in general position with repeated x.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::vector<Point> points);
  PointSet(std::initializer_list<Point> points) : PointSet(std::vector<Point>(points)) {}

  // Like the constructor, but throws NonGenericError unless the result is generic.
  static PointSet generic(std::vector<Point> points);

  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const Point& operator[](std::size_t i) const { return points_[i]; }
  const std::vector<Point>& points() const { return points_; }
  auto begin() const { return points_.begin(); }
  auto end() const { return points_.end(); }

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.points_ == b.points_; }

 private:
  std::vector<Point> points_;
};

bool has_distinct_x(const PointSet& P);
bool in_general_position(const PointSet& P);
bool is_generic(const PointSet& P);
bool is_very_generic(const PointSet& P);

void require_generic(const PointSet& P);
void require_general_position(const PointSet& P);

// A cup, cap or convex polygon given by indices into a point set, increasing.
struct Chain {
  int size = 0;
  std::vector<int> indices;
};

Chain longest_cup(const PointSet& P);
Chain longest_cap(const PointSet& P);
bool is_cupcap_free(const PointSet& P, int k, int l);

// Largest subset in convex position.
Chain largest_convex_subset(const PointSet& P);
// Largest convex subset of P + {q} containing q. In the witness, q has index
// P.size(); the other indices refer to P.
Chain largest_convex_subset_through(const PointSet& P, const Point& q);

bool is_cup(const std::vector<Point>& pts);
bool is_cap(const std::vector<Point>& pts);
// Independent convex-position test: no point lies in a triangle of three others.
bool in_convex_position(const std::vector<Point>& pts);

struct Shadow {
  Rational lo;
  Rational hi;
};

// Open x-interval of a witness whose points have strictly increasing x.
Shadow cup_shadow(const PointSet& P, const std::vector<int>& witness);

// a*x + b*y = c with gcd(a, b, c) = 1 and the first nonzero of (a, b) positive.
struct Line {
  Integer a;
  Integer b;
  Integer c;

  static Line through(const Point& p, const Point& q);
  static Line vertical(const Rational& x);

  bool is_vertical() const { return b == 0; }
  // Sign of a*x + b*y - c.
  int side(const Point& p) const;
  // y on the line at abscissa x; requires a non-vertical line.
  Rational y_at(const Rational& x) const;

  friend bool operator==(const Line& l, const Line& m) {
    return l.a == m.a && l.b == m.b && l.c == m.c;
  }
  friend bool operator<(const Line& l, const Line& m);
};

// Intersection point, or false for parallel lines.
bool intersect(const Line& l, const Line& m, Point& out);

PointSet read_points(std::istream& in);
PointSet load_points(const std::string& path);
void write_points(std::ostream& out, const PointSet& P);
void save_points(const std::string& path, const PointSet& P);

}  // namespace essat
