#include "essat/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "essat/errors.hpp"
#include "essat/order_type.hpp"

namespace essat {

Point make_point(long x, long y) { return {Rational(x), Rational(y)}; }

Orientation orientation(const Point& a, const Point& b, const Point& c) {
  const Rational lhs = (b.x - a.x) * (c.y - b.y);
  const Rational rhs = (b.y - a.y) * (c.x - b.x);
  const int s = cmp(lhs, rhs);
  return s > 0 ? Orientation::CCW : (s < 0 ? Orientation::CW : Orientation::COLLINEAR);
}

PointSet::PointSet(std::vector<Point> points) : points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  for (std::size_t i = 1; i < points_.size(); ++i) {
    if (points_[i] == points_[i - 1]) {
      throw NonGenericError("duplicate point (" + to_string(points_[i].x) + ", " +
                            to_string(points_[i].y) + ")");
    }
  }
}

PointSet PointSet::generic(std::vector<Point> points) {
  PointSet P(std::move(points));
  require_generic(P);
  return P;
}

bool has_distinct_x(const PointSet& P) {
  for (std::size_t i = 1; i < P.size(); ++i) {
    if (P[i].x == P[i - 1].x) return false;
  }
  return true;
}

namespace {

// First collinear triple (i < j < k), or false.
bool find_collinear(const PointSet& P, int& i0, int& j0, int& k0) {
  const int m = static_cast<int>(P.size());
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) {
      for (int k = j + 1; k < m; ++k) {
        if (orientation(P[i], P[j], P[k]) == Orientation::COLLINEAR) {
          i0 = i, j0 = j, k0 = k;
          return true;
        }
      }
    }
  }
  return false;
}

}  // namespace

bool in_general_position(const PointSet& P) {
  int i, j, k;
  return !find_collinear(P, i, j, k);
}

bool is_generic(const PointSet& P) { return has_distinct_x(P) && in_general_position(P); }

void require_general_position(const PointSet& P) {
  int i, j, k;
  if (find_collinear(P, i, j, k)) {
    throw NonGenericError("collinear points at indices " + std::to_string(i) + ", " +
                          std::to_string(j) + ", " + std::to_string(k));
  }
}

void require_generic(const PointSet& P) {
  for (std::size_t i = 1; i < P.size(); ++i) {
    if (P[i].x == P[i - 1].x) {
      throw NonGenericError("repeated x-coordinate " + to_string(P[i].x) + " at indices " +
                            std::to_string(i - 1) + ", " + std::to_string(i));
    }
  }
  require_general_position(P);
}

bool is_very_generic(const PointSet& P) {
  if (!is_generic(P)) return false;
  const int m = static_cast<int>(P.size());
  std::vector<Line> lines;
  for (int i = 0; i < m; ++i) {
    for (int j = i + 1; j < m; ++j) lines.push_back(Line::through(P[i], P[j]));
  }
  // Candidate abscissas: the points and every intersection, as exact
  // numerator/denominator plus a double used only to find near-ties.
  struct Cand {
    double approx;
    Integer xn, yn, d;  // point (xn/d, yn/d)
  };
  std::vector<Cand> cands;
  cands.reserve(P.size() + lines.size() * (lines.size() - 1) / 2);
  for (const auto& p : P) {
    Integer d = p.x.get_den() * p.y.get_den();
    cands.push_back({p.x.get_d(), p.x.get_num() * p.y.get_den(), p.y.get_num() * p.x.get_den(), d});
  }
  for (std::size_t a = 0; a < lines.size(); ++a) {
    const Line& l = lines[a];
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      const Line& r = lines[b];
      Integer det = l.a * r.b - l.b * r.a;
      if (det == 0) continue;
      Integer xn = l.c * r.b - l.b * r.c;
      Integer yn = l.a * r.c - l.c * r.a;
      cands.push_back({xn.get_d() / det.get_d(), std::move(xn), std::move(yn), std::move(det)});
    }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& u, const Cand& v) { return u.approx < v.approx; });
  // Within each run of nearly equal abscissas, compare exactly. Lines
  // through a common point meet there, so equal points are merged first.
  auto tol = [](double x) { return 1e-9 * std::max(1.0, std::abs(x)); };
  for (std::size_t i = 0; i < cands.size();) {
    std::size_t j = i + 1;
    while (j < cands.size() && cands[j].approx - cands[j - 1].approx <= tol(cands[j].approx)) ++j;
    if (j - i > 1) {
      std::vector<Point> run;
      for (std::size_t t = i; t < j; ++t) {
        Point q{Rational(cands[t].xn, cands[t].d), Rational(cands[t].yn, cands[t].d)};
        q.x.canonicalize();
        q.y.canonicalize();
        run.push_back(std::move(q));
      }
      std::sort(run.begin(), run.end());
      run.erase(std::unique(run.begin(), run.end()), run.end());
      for (std::size_t t = 1; t < run.size(); ++t) {
        if (run[t].x == run[t - 1].x) return false;
      }
    }
    i = j;
  }
  return true;
}

Chain longest_cup(const PointSet& P) {
  require_generic(P);
  return longest_chain(OrderType(P), kCupTurn);
}

Chain longest_cap(const PointSet& P) {
  require_generic(P);
  return longest_chain(OrderType(P), kCapTurn);
}

bool is_cupcap_free(const PointSet& P, int k, int l) {
  require_generic(P);
  const OrderType o(P);
  return longest_chain(o, kCupTurn).size < k && longest_chain(o, kCapTurn).size < l;
}

Chain largest_convex_subset(const PointSet& P) {
  require_general_position(P);
  return largest_convex(OrderType(P));
}

Chain largest_convex_subset_through(const PointSet& P, const Point& q) {
  std::vector<Point> pts(P.begin(), P.end());
  pts.push_back(q);
  const PointSet all(pts);
  require_general_position(all);
  const int pos = static_cast<int>(std::lower_bound(P.begin(), P.end(), q) - P.begin());
  Chain c = largest_convex(OrderType(all), pos);
  for (int& i : c.indices) {
    if (i == pos) i = static_cast<int>(P.size());
    else if (i > pos) --i;
  }
  return c;
}

namespace {

bool is_chain(const std::vector<Point>& pts, Orientation turn) {
  for (std::size_t i = 1; i < pts.size(); ++i) {
    if (!(pts[i - 1].x < pts[i].x)) return false;
  }
  for (std::size_t i = 2; i < pts.size(); ++i) {
    if (orientation(pts[i - 2], pts[i - 1], pts[i]) != turn) return false;
  }
  return true;
}

bool in_triangle(const Point& p, const Point& a, const Point& b, const Point& c) {
  const auto o1 = orientation(a, b, p), o2 = orientation(b, c, p), o3 = orientation(c, a, p);
  return o1 == o2 && o2 == o3;
}

}  // namespace

bool is_cup(const std::vector<Point>& pts) { return is_chain(pts, Orientation::CCW); }
bool is_cap(const std::vector<Point>& pts) { return is_chain(pts, Orientation::CW); }

bool in_convex_position(const std::vector<Point>& pts) {
  const std::size_t m = pts.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      for (std::size_t c = b + 1; c < m; ++c) {
        if (orientation(pts[a], pts[b], pts[c]) == Orientation::COLLINEAR) return false;
        for (std::size_t p = 0; p < m; ++p) {
          if (p != a && p != b && p != c && in_triangle(pts[p], pts[a], pts[b], pts[c])) {
            return false;
          }
        }
      }
    }
  }
  return true;
}

Shadow cup_shadow(const PointSet& P, const std::vector<int>& witness) {
  if (witness.size() < 2) throw PreconditionError("shadow needs at least two points");
  for (std::size_t i = 1; i < witness.size(); ++i) {
    if (!(P[witness[i - 1]].x < P[witness[i]].x)) {
      throw PreconditionError("witness is not strictly increasing in x");
    }
  }
  return {P[witness.front()].x, P[witness.back()].x};
}

namespace {

Line normalized(Integer a, Integer b, Integer c) {
  Integer g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g != 0 && g != 1) {
    a /= g;
    b /= g;
    c /= g;
  }
  if (a < 0 || (a == 0 && b < 0)) {
    a = -a;
    b = -b;
    c = -c;
  }
  return {a, b, c};
}

}  // namespace

Line Line::through(const Point& p, const Point& q) {
  if (p == q) throw PreconditionError("line through a single point");
  // (q - p) x (z - p) = 0, scaled to integers by the common denominator.
  const Rational a = p.y - q.y;
  const Rational b = q.x - p.x;
  const Rational c = a * p.x + b * p.y;
  Integer d;
  mpz_lcm(d.get_mpz_t(), a.get_den_mpz_t(), b.get_den_mpz_t());
  mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), c.get_den_mpz_t());
  const Rational ra = a * d, rb = b * d, rc = c * d;
  return normalized(ra.get_num(), rb.get_num(), rc.get_num());
}

Line Line::vertical(const Rational& x) {
  return normalized(x.get_den(), Integer(0), x.get_num());
}

int Line::side(const Point& p) const {
  const Rational v = Rational(a) * p.x + Rational(b) * p.y - Rational(c);
  return sgn(v);
}

Rational Line::y_at(const Rational& x) const {
  Rational y = (Rational(c) - Rational(a) * x) / Rational(b);
  return y;
}

bool operator<(const Line& l, const Line& m) {
  if (l.a != m.a) return l.a < m.a;
  if (l.b != m.b) return l.b < m.b;
  return l.c < m.c;
}

bool intersect(const Line& l, const Line& m, Point& out) {
  const Integer det = l.a * m.b - l.b * m.a;
  if (det == 0) return false;
  out.x = Rational(l.c * m.b - l.b * m.c, det);
  out.y = Rational(l.a * m.c - l.c * m.a, det);
  out.x.canonicalize();
  out.y.canonicalize();
  return true;
}

PointSet read_points(std::istream& in) {
  std::vector<Point> pts;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string xs, ys, extra;
    if (!(ss >> xs)) continue;
    if (!(ss >> ys)) throw ParseError("expected two coordinates", lineno);
    if (ss >> extra) throw ParseError("unexpected token '" + extra + "'", lineno);
    try {
      pts.push_back({parse_rational(xs), parse_rational(ys)});
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return PointSet(std::move(pts));
}

PointSet load_points(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_points(in);
}

void write_points(std::ostream& out, const PointSet& P) {
  for (const auto& p : P) out << to_string(p.x) << ' ' << to_string(p.y) << '\n';
}

void save_points(const std::string& path, const PointSet& P) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  write_points(out, P);
}

}  // namespace essat
