#include "essat/constructions.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "essat/errors.hpp"

namespace essat {

namespace {

PointSet from_ints(std::initializer_list<std::pair<long, long>> xy) {
  std::vector<Point> pts;
  for (const auto& [x, y] : xy) pts.push_back(make_point(x, y));
  return PointSet::generic(std::move(pts));
}

PointSet parabola_cap(int size) {
  std::vector<Point> pts;
  for (int i = 0; i < size; ++i) pts.push_back(make_point(i, -static_cast<long>(i) * i));
  return PointSet::generic(std::move(pts));
}

Rational slope(const Point& p, const Point& q) { return (q.y - p.y) / (q.x - p.x); }

Rational max_abs_slope(const PointSet& P) {
  Rational s = 0;
  for (std::size_t i = 0; i < P.size(); ++i) {
    for (std::size_t j = i + 1; j < P.size(); ++j) s = std::max(s, Rational(abs(slope(P[i], P[j]))));
  }
  return s;
}

PointSet translate(const PointSet& P, const Rational& dx, const Rational& dy) {
  std::vector<Point> pts;
  for (const auto& p : P) pts.push_back({p.x + dx, p.y + dy});
  return PointSet(std::move(pts));
}

// y at abscissa x on the line through p and q (distinct x).
Rational line_y(const Point& p, const Point& q, const Rational& x) {
  return p.y + slope(p, q) * (x - p.x);
}

bool in_disk(const Point& p, const Point& c, const Rational& r) {
  const Rational dx = p.x - c.x, dy = p.y - c.y;
  return dx * dx + dy * dy < r * r;
}

std::string show(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

}  // namespace

bool has_base_cupcap(int k, int l) {
  if (k < 1 || l < 1) return false;
  if (k <= 3 || l <= 3) return true;
  return (k == 4 && l == 4) || (k == 4 && l == 5) || (k == 5 && l == 4);
}

PointSet base_cupcap_saturated(int k, int l) {
  if (!has_base_cupcap(k, l)) {
    throw PreconditionError("no base construction for (" + std::to_string(k) + ", " +
                            std::to_string(l) + ")");
  }
  if (k == 1 || l == 1) return {};
  if (k == 2 || l == 2) return PointSet{make_point(0, 0)};
  if (k == 3) return very_generic_repair(parabola_cap(l - 1));
  if (l == 3) return reflect(base_cupcap_saturated(3, k));
  if (k == 4 && l == 4) {
    // Found by a search over a small integer grid; (4,4)-cup-cap-free of the
    // maximum size 6, hence saturated. Very generic.
    return from_ints({{3, 6}, {4, 5}, {9, -1}, {13, 5}, {16, 0}, {22, -3}});
  }
  if (k == 4 && l == 5) {
    return from_ints({{-60, 40}, {-40, 20}, {-20, 16}, {0, 10}, {5, -50}, {15, -40}, {25, -40},
                      {125, -230}});
  }
  return reflect(base_cupcap_saturated(4, 5));
}

PointSet reflect(const PointSet& P) {
  std::vector<Point> pts;
  for (const auto& p : P) pts.push_back({p.x, -p.y});
  return PointSet(std::move(pts));
}

PointSet combine(const PointSet& A, const PointSet& B, Rational* lift) {
  require_generic(A);
  require_generic(B);
  if (lift) *lift = 0;
  if (A.empty()) return B;
  if (B.empty()) return A;
  const PointSet B1 = translate(B, A[A.size() - 1].x - B[0].x + 1, 0);
  // The lift must exceed every a.y - lineB(a.x) and every lineA(b.x) - b.y.
  std::optional<Rational> need;
  auto bump = [&](const Rational& v) {
    if (!need || v > *need) need = v;
  };
  for (std::size_t i = 0; i < B1.size(); ++i) {
    for (std::size_t j = i + 1; j < B1.size(); ++j) {
      for (const auto& a : A) bump(a.y - line_y(B1[i], B1[j], a.x));
    }
  }
  for (std::size_t i = 0; i < A.size(); ++i) {
    for (std::size_t j = i + 1; j < A.size(); ++j) {
      for (const auto& b : B1) bump(line_y(A[i], A[j], b.x) - b.y);
    }
  }
  Rational dy = 1;
  while (need && dy <= *need) dy *= 2;
  if (lift) *lift = dy;
  std::vector<Point> pts(A.begin(), A.end());
  for (const auto& b : B1) pts.push_back({b.x, b.y + dy});
  // Strict separation rules out collinear triples across the two halves.
  return PointSet::generic(std::move(pts));
}

PointSet flatten(const PointSet& P, const Rational& delta) {
  if (delta <= 0) throw PreconditionError("flattening factor must be positive");
  std::vector<Point> pts;
  for (const auto& p : P) pts.push_back({p.x, p.y * delta});
  return PointSet(std::move(pts));
}

PointSet very_generic_repair(const PointSet& P, Integer* M) {
  require_generic(P);
  if (M) *M = 0;
  if (is_very_generic(P)) return P;
  const Rational steep = max_abs_slope(P);
  Integer m = 1;
  while (Rational(m) <= steep) m *= 2;
  for (int attempt = 0; attempt < 64; ++attempt, m *= 2) {
    std::vector<Point> pts;
    for (const auto& p : P) pts.push_back({Rational(m) * p.x + p.y, Rational(m) * p.y});
    PointSet Q(std::move(pts));
    if (is_very_generic(Q)) {
      if (M) *M = m;
      return Q;
    }
  }
  throw std::runtime_error("very generic repair did not converge");
}

namespace {

struct Builder {
  bool extremal_free = false;
  std::map<std::pair<int, int>, PointSet> memo;
  std::vector<Rational> lifts;

  PointSet build(int k, int l) {
    const auto key = std::make_pair(k, l);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    PointSet out;
    if (extremal_free) {
      if (k == 1 || l == 1) out = {};
      else if (k == 2 || l == 2) out = PointSet{make_point(0, 0)};
      else out = join(k, l);
    } else if (has_base_cupcap(k, l)) {
      out = base_cupcap_saturated(k, l);
    } else {
      out = join(k, l);
    }
    if (out.size() <= kRepairLimit) out = very_generic_repair(out);
    memo.emplace(key, out);
    return out;
  }

  PointSet join(int k, int l) {
    Rational lift;
    PointSet out = combine(build(k - 1, l), build(k, l - 1), &lift);
    lifts.push_back(lift);
    return out;
  }
};

}  // namespace

namespace {

// Outputs are deterministic and the larger ones take seconds, so finished
// sets are kept for the life of the process.
PointSet cached_build(int k, int l, bool extremal_free) {
  static std::mutex mu;
  static std::map<std::tuple<bool, int, int>, PointSet> cache;
  const auto key = std::make_tuple(extremal_free, k, l);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Builder b;
  b.extremal_free = extremal_free;
  PointSet out = b.build(k, l);
  std::lock_guard lock(mu);
  cache.emplace(key, out);
  return out;
}

}  // namespace

PointSet cupcap_saturated(int k, int l) {
  if (k < 1 || l < 1) throw PreconditionError("k and l must be positive");
  return cached_build(k, l, false);
}

PointSet cupcap_free_extremal(int k, int l) {
  if (k < 1 || l < 1) throw PreconditionError("k and l must be positive");
  return cached_build(k, l, true);
}

Integer binomial(int n, int r) {
  if (r < 0 || n < 0 || r > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
  return out;
}

Integer cupcap_upper_bound(int k, int l) {
  return binomial(k + l - 4, k - 2) - 2 * binomial(k + l - 8, k - 4);
}

Integer cupcap_saturated_size(int k, int l) {
  std::map<std::pair<int, int>, Integer> memo;
  std::function<Integer(int, int)> size = [&](int a, int b) -> Integer {
    if (a == 1 || b == 1) return 0;
    if (a == 2 || b == 2) return 1;
    if (a == 3) return b - 1;
    if (b == 3) return a - 1;
    if ((a == 4 && b == 4)) return 6;
    if ((a == 4 && b == 5) || (a == 5 && b == 4)) return 8;
    const auto key = std::make_pair(a, b);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
    Integer v = size(a - 1, b) + size(a, b - 1);
    memo.emplace(key, v);
    return v;
  };
  if (k < 1 || l < 1) throw PreconditionError("k and l must be positive");
  return size(k, l);
}

Integer gon_saturated_size(int n) {
  if (n == 3) return 2;
  if (n == 4) return 4;
  Integer total = 0;
  for (int i = 1; i < n; ++i) total += cupcap_saturated_size(i + 1, n + 1 - i);
  return total;
}

PlacementReport check_placement(const std::vector<PointSet>& placed, const Rational& eps,
                                const std::vector<Rational>& delta) {
  PlacementReport r;
  const int groups = static_cast<int>(placed.size());
  r.n = groups + 1;
  r.eps = eps;
  r.delta = delta;
  for (int i = 0; i < groups; ++i) {
    r.group_sizes.push_back(static_cast<int>(placed[i].size()));
    r.centers.push_back(make_point(i + 1, static_cast<long>(i + 1) * (i + 1)));
  }
  auto fail = [](PropertyResult& pr, const std::string& why) {
    if (pr.ok) {
      pr.ok = false;
      pr.detail = why;
    }
  };

  for (int i = 0; i < groups; ++i) {
    const auto& G = placed[i];
    const Point& c = r.centers[i];
    for (const auto& p : G) {
      if (!in_disk(p, c, delta[i])) fail(r.disk, "group " + std::to_string(i + 1) + " point " + show(p));
    }
    for (std::size_t a = 0; a < G.size(); ++a) {
      for (std::size_t b = a + 1; b < G.size(); ++b) {
        if (!(abs(slope(G[a], G[b])) < eps)) {
          fail(r.slope, "group " + std::to_string(i + 1) + " pair " + show(G[a]) + " " + show(G[b]));
        }
        for (std::size_t d = b + 1; d < G.size(); ++d) {
          // Corners of the regions where a point extends a chain of G inside.
          const Point v1{G[a].x, line_y(G[b], G[d], G[a].x)};
          const Point v2{G[d].x, line_y(G[a], G[b], G[d].x)};
          if (!in_disk(v1, c, delta[i])) fail(r.extension, "group " + std::to_string(i + 1) + " corner " + show(v1));
          if (!in_disk(v2, c, delta[i])) fail(r.extension, "group " + std::to_string(i + 1) + " corner " + show(v2));
        }
      }
    }
  }

  for (int i = 0; i < groups; ++i) {
    for (int j = i + 1; j < groups; ++j) {
      const auto& Gi = placed[i];
      const auto& Gj = placed[j];
      for (std::size_t a = 0; a < Gi.size(); ++a) {
        for (std::size_t b = a + 1; b < Gi.size(); ++b) {
          for (const auto& z : Gj) {
            if (!(z.y > line_y(Gi[a], Gi[b], z.x))) {
              fail(r.hierarchy, "line of group " + std::to_string(i + 1) + " not below " + show(z));
            }
          }
        }
      }
      for (std::size_t a = 0; a < Gj.size(); ++a) {
        for (std::size_t b = a + 1; b < Gj.size(); ++b) {
          for (const auto& z : Gi) {
            if (!(z.y < line_y(Gj[a], Gj[b], z.x))) {
              fail(r.hierarchy, "line of group " + std::to_string(j + 1) + " not above " + show(z));
            }
          }
        }
      }
    }
  }

  // Lines from group i to group i+1 meet lines from group i+1 to group i+2
  // near the middle center.
  for (int i = 0; i + 2 < groups; ++i) {
    const Point& c = r.centers[i + 1];
    for (const auto& x : placed[i]) {
      for (const auto& y : placed[i + 1]) {
        const Line l1 = Line::through(x, y);
        for (const auto& z : placed[i + 1]) {
          for (const auto& w : placed[i + 2]) {
            Point v;
            if (!intersect(l1, Line::through(z, w), v) || !in_disk(v, c, eps)) {
              fail(r.crossing, "lines " + show(x) + show(y) + " and " + show(z) + show(w));
            }
          }
        }
      }
    }
  }
  return r;
}

namespace {

// Centers the bounding box at the origin and scales by a power of two so
// every coordinate has absolute value at most 1/2.
PointSet normalize(const PointSet& P) {
  if (P.empty()) return P;
  Rational minx = P[0].x, maxx = P[0].x, miny = P[0].y, maxy = P[0].y;
  for (const auto& p : P) {
    minx = std::min(minx, p.x);
    maxx = std::max(maxx, p.x);
    miny = std::min(miny, p.y);
    maxy = std::max(maxy, p.y);
  }
  const Rational cx = midpoint(minx, maxx), cy = midpoint(miny, maxy);
  const Rational extent = std::max(maxx - cx, maxy - cy);
  Rational scale = 1;
  while (extent * scale > Rational(1, 2)) scale /= 2;
  std::vector<Point> pts;
  for (const auto& p : P) pts.push_back({(p.x - cx) * scale, (p.y - cy) * scale});
  return PointSet(std::move(pts));
}

GonConstruction place_groups(const GonConstructionParams& params, bool extremal_free) {
  const int n = params.n;
  if (n < 3) throw PreconditionError("n must be at least 3");
  if (!(params.eps > 0 && params.eps < Rational(1, 4))) {
    throw PreconditionError("eps must lie in (0, 1/4)");
  }
  const int groups = n - 1;
  std::vector<Rational> delta = params.delta;
  if (delta.empty()) delta.assign(groups, params.eps / 2);
  if (static_cast<int>(delta.size()) != groups) {
    throw PreconditionError("need one delta per group (" + std::to_string(groups) + ")");
  }
  for (const auto& d : delta) {
    if (!(d > 0 && d <= params.eps)) throw PreconditionError("each delta must lie in (0, eps]");
  }

  Builder builder;
  builder.extremal_free = extremal_free;
  std::vector<PointSet> unit;
  std::vector<Integer> shear;
  for (int i = 1; i < n; ++i) {
    Integer M;
    const PointSet G = very_generic_repair(builder.build(i + 1, n + 1 - i), &M);
    shear.push_back(M);
    unit.push_back(normalize(G));
  }

  std::string last_failure = "none";
  for (int attempt = 1; attempt <= params.max_attempts; ++attempt) {
    std::vector<PointSet> placed;
    std::vector<Point> all;
    for (int i = 0; i < groups; ++i) {
      const Rational cx = i + 1, cy = static_cast<long>(i + 1) * (i + 1);
      std::vector<Point> pts;
      for (const auto& p : unit[i]) pts.push_back({cx + delta[i] * p.x, cy + delta[i] * delta[i] * p.y});
      placed.emplace_back(pts);
      all.insert(all.end(), pts.begin(), pts.end());
    }
    GonConstruction out;
    out.report = check_placement(placed, params.eps, delta);
    out.report.shear = shear;
    out.report.lift = builder.lifts;
    out.report.attempts = attempt;
    auto halve = [&](const std::string& why) {
      last_failure = why;
      for (auto& d : delta) d /= 2;
    };
    if (!out.report.disk.ok) { halve("disk"); continue; }
    if (!out.report.slope.ok) { halve("slope"); continue; }
    if (!out.report.hierarchy.ok) { halve("hierarchy"); continue; }
    if (!out.report.crossing.ok) { halve("crossing"); continue; }
    if (!out.report.extension.ok) { halve("extension"); continue; }
    out.points = PointSet(all);
    if (!in_general_position(out.points)) { halve("general position"); continue; }
    out.report.largest_convex = largest_convex_subset(out.points).size;
    if (out.report.largest_convex >= n) { halve("freeness"); continue; }
    if (params.level == VerifyLevel::FULL) {
      out.certificate = verify_gon_saturated(out.points, n, params.verify);
      out.report.verdict = out.certificate->verdict;
      if (out.certificate->verdict != Verdict::SATURATED) { halve("saturation"); continue; }
    }
    return out;
  }
  throw RetryBudgetExhausted(last_failure, params.max_attempts);
}

GonConstruction small_case(const GonConstructionParams& params, PointSet P) {
  GonConstruction out;
  out.points = std::move(P);
  out.report.n = params.n;
  out.report.eps = params.eps;
  out.report.group_sizes = {static_cast<int>(out.points.size())};
  out.report.attempts = 1;
  out.report.largest_convex = largest_convex_subset(out.points).size;
  if (params.level == VerifyLevel::FULL) {
    out.certificate = verify_gon_saturated(out.points, params.n, params.verify);
    out.report.verdict = out.certificate->verdict;
  }
  return out;
}

}  // namespace

GonConstruction gon_saturated(const GonConstructionParams& params) {
  if (params.n == 3) return small_case(params, PointSet{make_point(0, 0), make_point(1, 1)});
  if (params.n == 4) {
    return small_case(params, PointSet{make_point(0, 0), make_point(6, 1), make_point(2, 5), make_point(3, 2)});
  }
  return place_groups(params, false);
}

GonConstruction es_free_construction(const GonConstructionParams& params) {
  return place_groups(params, true);
}

namespace {

nlohmann::ordered_json property_json(const PropertyResult& p) {
  return {{"ok", p.ok}, {"detail", p.detail}};
}

}  // namespace

nlohmann::ordered_json PlacementReport::to_json() const {
  nlohmann::ordered_json j;
  j["n"] = n;
  j["eps"] = to_string(eps);
  auto ds = nlohmann::ordered_json::array();
  for (const auto& d : delta) ds.push_back(to_string(d));
  j["delta"] = ds;
  j["group_sizes"] = group_sizes;
  auto cs = nlohmann::ordered_json::array();
  for (const auto& c : centers) cs.push_back({to_string(c.x), to_string(c.y)});
  j["centers"] = cs;
  auto sh = nlohmann::ordered_json::array();
  for (const auto& m : shear) sh.push_back(m.get_str());
  j["shear"] = sh;
  auto lf = nlohmann::ordered_json::array();
  for (const auto& l : lift) lf.push_back(to_string(l));
  j["lift"] = lf;
  j["properties"] = {{"in_disk", property_json(disk)},
                     {"flat_slopes", property_json(slope)},
                     {"height_hierarchy", property_json(hierarchy)},
                     {"crossings_near_centers", property_json(crossing)},
                     {"extensions_in_disk", property_json(extension)}};
  j["attempts"] = attempts;
  j["largest_convex"] = largest_convex;
  j["verdict"] = verdict ? nlohmann::ordered_json(to_string(*verdict)) : nlohmann::ordered_json(nullptr);
  return j;
}

PlacementReport PlacementReport::from_json(const nlohmann::json& j) {
  PlacementReport r;
  r.n = j.value("n", 0);
  if (j.contains("eps")) r.eps = parse_rational(j["eps"].get<std::string>());
  if (j.contains("delta")) {
    for (const auto& d : j["delta"]) r.delta.push_back(parse_rational(d.get<std::string>()));
  }
  if (j.contains("centers")) {
    for (const auto& c : j["centers"]) {
      r.centers.push_back({parse_rational(c[0].get<std::string>()), parse_rational(c[1].get<std::string>())});
    }
  }
  if (j.contains("group_sizes")) r.group_sizes = j["group_sizes"].get<std::vector<int>>();
  if (j.contains("shear")) {
    for (const auto& m : j["shear"]) r.shear.emplace_back(m.get<std::string>());
  }
  if (j.contains("lift")) {
    for (const auto& l : j["lift"]) r.lift.push_back(parse_rational(l.get<std::string>()));
  }
  if (j.contains("properties")) {
    const auto& p = j["properties"];
    const auto read = [&](const char* key, PropertyResult& out) {
      if (!p.contains(key)) return;
      out.ok = p[key].value("ok", true);
      out.detail = p[key].value("detail", "");
    };
    read("in_disk", r.disk);
    read("flat_slopes", r.slope);
    read("height_hierarchy", r.hierarchy);
    read("crossings_near_centers", r.crossing);
    read("extensions_in_disk", r.extension);
  }
  r.attempts = j.value("attempts", 0);
  r.largest_convex = j.value("largest_convex", 0);
  if (j.contains("verdict") && !j["verdict"].is_null()) {
    const auto v = j["verdict"].get<std::string>();
    if (v == "SATURATED") {
      r.verdict = Verdict::SATURATED;
    } else if (v == "NOT_FREE") {
      r.verdict = Verdict::NOT_FREE;
    } else if (v == "NOT_SATURATED") {
      r.verdict = Verdict::NOT_SATURATED;
    } else {
      throw ParseError("unknown verdict: " + v);
    }
  }
  return r;
}

}  // namespace essat
