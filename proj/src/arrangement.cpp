#include "essat/arrangement.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <thread>

#include "essat/errors.hpp"
#include "essat/order_type.hpp"

namespace essat {

std::string to_string(Mode mode) { return mode == Mode::CUPCAP ? "cupcap" : "gon"; }

std::vector<Line> spanned_lines(const PointSet& P, bool include_vertical) {
  std::vector<Line> lines;
  const std::size_t m = P.size();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) lines.push_back(Line::through(P[i], P[j]));
    if (include_vertical) lines.push_back(Line::vertical(P[i].x));
  }
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

std::vector<Rational> critical_abscissas(const PointSet& P, const std::vector<Line>& lines) {
  std::vector<Rational> xs;
  for (const auto& p : P) xs.push_back(p.x);
  Point v;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      if (intersect(lines[a], lines[b], v)) xs.push_back(v.x);
    }
  }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::size_t arrangement_cell_count(const std::vector<Line>& lines) {
  std::map<Point, std::vector<std::size_t>> through;
  Point v;
  for (std::size_t a = 0; a < lines.size(); ++a) {
    for (std::size_t b = a + 1; b < lines.size(); ++b) {
      if (intersect(lines[a], lines[b], v)) {
        auto& ls = through[v];
        ls.push_back(a);
        ls.push_back(b);
      }
    }
  }
  std::size_t count = 1 + lines.size();
  for (auto& [pt, ls] : through) {
    std::sort(ls.begin(), ls.end());
    ls.erase(std::unique(ls.begin(), ls.end()), ls.end());
    count += ls.size() - 1;
  }
  return count;
}

namespace {

Rational simplest_below(const Rational& v) {
  if (v > 0) return Rational(0);
  return Rational(ceil(v) - 1);
}

Rational simplest_above(const Rational& v) {
  if (v < 0) return Rational(0);
  return Rational(floor(v) + 1);
}

struct Vertex {
  Point at;
  std::vector<int> lines;  // non-vertical line slots through the vertex
};

}  // namespace

SweepStats for_each_cell(const PointSet& P, Mode mode, const SampleOptions& opts,
                         const std::function<bool(CellSample&&)>& visit) {
  const int m = static_cast<int>(P.size());
  const auto lines = spanned_lines(P, mode == Mode::CUPCAP);

  // Non-vertical lines get slots 0..nv-1.
  std::vector<int> slot_line;
  std::vector<Rational> vertical_x;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].is_vertical()) vertical_x.push_back(Rational(lines[i].c, lines[i].a));
    else slot_line.push_back(static_cast<int>(i));
  }
  for (auto& x : vertical_x) x.canonicalize();
  std::sort(vertical_x.begin(), vertical_x.end());
  const int nv = static_cast<int>(slot_line.size());

  // Vertices of the non-vertical sub-arrangement, grouped by point.
  std::vector<std::pair<Point, std::pair<int, int>>> hits;
  Point v;
  for (int a = 0; a < nv; ++a) {
    for (int b = a + 1; b < nv; ++b) {
      if (intersect(lines[slot_line[a]], lines[slot_line[b]], v)) hits.push_back({v, {a, b}});
    }
  }
  std::sort(hits.begin(), hits.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Vertex> vertices;
  for (std::size_t i = 0; i < hits.size();) {
    Vertex vx{hits[i].first, {}};
    std::size_t j = i;
    for (; j < hits.size() && hits[j].first == hits[i].first; ++j) {
      vx.lines.push_back(hits[j].second.first);
      vx.lines.push_back(hits[j].second.second);
    }
    std::sort(vx.lines.begin(), vx.lines.end());
    vx.lines.erase(std::unique(vx.lines.begin(), vx.lines.end()), vx.lines.end());
    vertices.push_back(std::move(vx));
    i = j;
  }
  hits.clear();

  std::vector<Rational> crit;
  for (const auto& p : P) crit.push_back(p.x);
  for (const auto& vx : vertices) crit.push_back(vx.at.x);
  for (const auto& x : vertical_x) crit.push_back(x);
  std::sort(crit.begin(), crit.end());
  crit.erase(std::unique(crit.begin(), crit.end()), crit.end());

  // Pair (i, j), i < j, maps to a line slot. For x_i < x_j the sample turns
  // counterclockwise exactly when it lies above the line; for a vertical
  // pair (GON mode only) it turns clockwise exactly when it lies to the right.
  const auto M = static_cast<std::size_t>(m);
  std::vector<int> pair_slot(M * M, -1);
  std::vector<std::int8_t> pair_flip(M * M, 1);
  {
    std::vector<int> line_slot(lines.size(), -1);
    for (int s = 0; s < nv; ++s) line_slot[slot_line[s]] = s;
    for (int i = 0; i < m; ++i) {
      for (int j = i + 1; j < m; ++j) {
        const Line l = Line::through(P[i], P[j]);
        const auto idx = std::lower_bound(lines.begin(), lines.end(), l) - lines.begin();
        const std::size_t p = i * M + j;
        if (l.is_vertical()) {
          pair_flip[p] = -1;
        } else {
          pair_slot[p] = line_slot[idx];
        }
      }
    }
  }

  SweepStats stats;
  stats.n_lines = lines.size();
  const std::size_t n_slabs = crit.size() + 1;
  stats.n_samples = n_slabs * static_cast<std::size_t>(nv + 1);

  auto slab_x = [&](std::size_t s) -> Rational {
    if (crit.empty()) return Rational(0);
    if (s == 0) return opts.simplify ? simplest_below(crit.front()) : Rational(crit.front() - 1);
    if (s == crit.size()) return opts.simplify ? simplest_above(crit.back()) : Rational(crit.back() + 1);
    return opts.simplify ? simplest_between(crit[s - 1], crit[s]) : midpoint(crit[s - 1], crit[s]);
  };

  // order[r]: slot at rank r from the bottom; rank[slot] its inverse.
  std::vector<int> order(nv), rank(nv);
  {
    const Rational x0 = slab_x(0);
    std::vector<Rational> ys(nv);
    for (int s = 0; s < nv; ++s) ys[s] = lines[slot_line[s]].y_at(x0);
    for (int s = 0; s < nv; ++s) order[s] = s;
    std::sort(order.begin(), order.end(), [&](int a, int b) { return ys[a] < ys[b]; });
    for (int r = 0; r < nv; ++r) rank[order[r]] = r;
  }

  std::size_t next_vertex = 0, next_vertical = 0;
  std::vector<char> fresh(nv + 1, 1);
  for (std::size_t s = 0; s < n_slabs; ++s) {
    if (s > 0) {
      const Rational& boundary = crit[s - 1];
      std::fill(fresh.begin(), fresh.end(), 0);
      bool wall = false;
      while (next_vertical < vertical_x.size() && vertical_x[next_vertical] == boundary) {
        wall = true;
        ++next_vertical;
      }
      while (next_vertex < vertices.size() && vertices[next_vertex].at.x == boundary) {
        const auto& vx = vertices[next_vertex++];
        int lo = nv, hi = -1;
        for (int sl : vx.lines) {
          lo = std::min(lo, rank[sl]);
          hi = std::max(hi, rank[sl]);
        }
        std::reverse(order.begin() + lo, order.begin() + hi + 1);
        for (int r = lo; r <= hi; ++r) rank[order[r]] = r;
        for (int g = lo + 1; g <= hi; ++g) fresh[g] = 1;
      }
      if (wall) std::fill(fresh.begin(), fresh.end(), 1);
    }

    const Rational x = slab_x(s);
    const int pos = static_cast<int>(
        std::lower_bound(P.begin(), P.end(), x, [](const Point& p, const Rational& v) { return p.x < v; }) -
        P.begin());
    for (int g = 0; g <= nv; ++g) {
      if (!fresh[g]) continue;
      CellSample cell;
      cell.point.x = x;
      if (nv == 0) {
        cell.point.y = 0;
      } else if (g == 0) {
        const Rational up = lines[slot_line[order[0]]].y_at(x);
        cell.point.y = opts.simplify ? simplest_below(up) : Rational(up - 1);
      } else if (g == nv) {
        const Rational down = lines[slot_line[order[nv - 1]]].y_at(x);
        cell.point.y = opts.simplify ? simplest_above(down) : Rational(down + 1);
      } else {
        const Rational down = lines[slot_line[order[g - 1]]].y_at(x);
        const Rational up = lines[slot_line[order[g]]].y_at(x);
        cell.point.y = opts.simplify ? simplest_between(down, up) : midpoint(down, up);
      }
      cell.pos = pos;
      cell.qrow.assign(M * M, 0);
      for (int i = 0; i < m; ++i) {
        for (int j = i + 1; j < m; ++j) {
          const std::size_t p = i * M + j;
          int side;
          if (pair_slot[p] >= 0) {
            side = rank[pair_slot[p]] < g ? 1 : -1;  // 1: sample above the line
          } else {
            side = x > P[i].x ? 1 : -1;
          }
          const auto o = static_cast<std::int8_t>(side * pair_flip[p]);
          cell.qrow[p] = o;
          cell.qrow[j * M + i] = static_cast<std::int8_t>(-o);
        }
      }
      ++stats.n_cells;
      if (!visit(std::move(cell))) return stats;
    }
  }
  return stats;
}

CellSampleSet sample_cells(const PointSet& P, Mode mode, const SampleOptions& opts) {
  if (mode == Mode::CUPCAP) require_generic(P);
  else require_general_position(P);
  CellSampleSet out;
  out.mode = mode;
  out.lines = spanned_lines(P, mode == Mode::CUPCAP);
  out.critical_x = critical_abscissas(P, out.lines);
  out.stats = for_each_cell(P, mode, opts, [&](CellSample&& c) {
    out.samples.push_back(std::move(c.point));
    return true;
  });
  return out;
}

int resolve_threads(int requested) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("ESSAT_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return n;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

CellSample cell_for(const PointSet& P, const Point& q) {
  const int m = static_cast<int>(P.size());
  const auto M = static_cast<std::size_t>(m);
  CellSample c;
  c.point = q;
  c.pos = static_cast<int>(std::lower_bound(P.begin(), P.end(), q) - P.begin());
  c.qrow.assign(M * M, 0);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      if (i != j) c.qrow[i * M + j] = static_cast<std::int8_t>(orientation(P[i], P[j], q));
    }
  }
  return c;
}

// Converts augmented indices to the |P|-for-the-sample convention.
std::vector<int> to_point_indices(const AugmentedOrder& a, const std::vector<int>& aug, int m) {
  std::vector<int> out;
  for (int i : aug) out.push_back(i == a.q() ? m : a.to_base(i));
  return out;
}

// Leftmost window of `len` consecutive chain members that contains q.
std::vector<int> window_with(const std::vector<int>& chain, int q, int len) {
  const int at = static_cast<int>(std::find(chain.begin(), chain.end(), q) - chain.begin());
  const int start = std::max(0, at - len + 1);
  return {chain.begin() + start, chain.begin() + start + len};
}

struct CupCapContext {
  const PointSet* P;
  OrderType o;
  ChainTables cups, caps;
  int k, l;
};

std::optional<Witness> good_cupcap(const CupCapContext& ctx, const CellSample& cell) {
  const int m = static_cast<int>(ctx.P->size());
  const AugmentedOrder a(ctx.o, cell.pos, cell.qrow);
  const Chain cup = longest_chain_through(ctx.o, ctx.cups, a);
  if (cup.size >= ctx.k) {
    return Witness{cell.point, WitnessKind::CUP, to_point_indices(a, window_with(cup.indices, a.q(), ctx.k), m)};
  }
  const Chain cap = longest_chain_through(ctx.o, ctx.caps, a);
  if (cap.size >= ctx.l) {
    return Witness{cell.point, WitnessKind::CAP, to_point_indices(a, window_with(cap.indices, a.q(), ctx.l), m)};
  }
  return std::nullopt;
}

std::optional<Witness> good_gon(const OrderType& o, const CellSample& cell, int n, int m) {
  const AugmentedOrder a(o, cell.pos, cell.qrow);
  const Chain c = largest_convex(a, a.q());
  if (c.size < n) return std::nullopt;
  std::vector<int> idx = to_point_indices(a, c.indices, m);
  std::sort(idx.begin(), idx.end());
  // Keep the sample (index m, last after sorting) and the first n - 1 others.
  std::vector<int> keep(idx.begin(), idx.begin() + (n - 1));
  keep.push_back(m);
  return Witness{cell.point, WitnessKind::GON, keep};
}

// Evaluates cells in batches, in parallel within a batch, and records
// results in sweep order so the certificate is schedule-independent.
template <class Check>
SweepStats run_cells(const PointSet& P, Mode mode, const VerifyOptions& opts, Check check,
                     Certificate& cert) {
  const int threads = resolve_threads(opts.threads);
  std::vector<CellSample> batch;
  bool failed = false;
  auto flush = [&]() {
    std::vector<std::optional<Witness>> results(batch.size());
    auto work = [&](int t) {
      for (std::size_t i = t; i < batch.size(); i += threads) results[i] = check(batch[i]);
    };
    if (threads <= 1 || batch.size() < 2) {
      work(0);
      // Single thread: same results, same order.
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < threads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    for (std::size_t i = 0; i < batch.size(); ++i) {
      if (!results[i]) {
        cert.failure = batch[i].point;
        failed = true;
        break;
      }
      if (opts.keep_witnesses) cert.witnesses.push_back(std::move(*results[i]));
    }
    batch.clear();
  };
  SampleOptions sopts;
  sopts.simplify = opts.simplify;
  SweepStats stats = for_each_cell(P, mode, sopts, [&](CellSample&& c) {
    batch.push_back(std::move(c));
    if (batch.size() >= opts.chunk) flush();
    return !failed;
  });
  if (!failed && !batch.empty()) flush();
  cert.verdict = failed ? Verdict::NOT_SATURATED : Verdict::SATURATED;
  return stats;
}

}  // namespace

std::optional<Witness> is_good_cupcap(const PointSet& P, const Point& q, int k, int l) {
  std::vector<Point> all(P.begin(), P.end());
  all.push_back(q);
  require_generic(PointSet(all));
  CupCapContext ctx{&P, OrderType(P), {}, {}, k, l};
  ctx.cups = chain_tables(ctx.o, kCupTurn);
  ctx.caps = chain_tables(ctx.o, kCapTurn);
  return good_cupcap(ctx, cell_for(P, q));
}

std::optional<Witness> is_good_gon(const PointSet& P, const Point& q, int n) {
  std::vector<Point> all(P.begin(), P.end());
  all.push_back(q);
  require_general_position(PointSet(all));
  return good_gon(OrderType(P), cell_for(P, q), n, static_cast<int>(P.size()));
}

Certificate verify_cupcap_saturated(const PointSet& P, int k, int l, const VerifyOptions& opts) {
  require_generic(P);
  Certificate cert;
  cert.mode = Mode::CUPCAP;
  cert.k = k;
  cert.l = l;
  cert.points = P;
  CupCapContext ctx{&P, OrderType(P), {}, {}, k, l};
  const Chain cup = longest_chain(ctx.o, kCupTurn);
  const Chain cap = longest_chain(ctx.o, kCapTurn);
  if (cup.size >= k || cap.size >= l) {
    cert.verdict = Verdict::NOT_FREE;
    if (cup.size >= k) {
      cert.freeness_witness = Witness{std::nullopt, WitnessKind::CUP, {cup.indices.begin(), cup.indices.begin() + k}};
    } else {
      cert.freeness_witness = Witness{std::nullopt, WitnessKind::CAP, {cap.indices.begin(), cap.indices.begin() + l}};
    }
    return cert;
  }
  ctx.cups = chain_tables(ctx.o, kCupTurn);
  ctx.caps = chain_tables(ctx.o, kCapTurn);
  cert.stats = run_cells(P, Mode::CUPCAP, opts, [&](const CellSample& c) { return good_cupcap(ctx, c); }, cert);
  return cert;
}

Certificate verify_gon_saturated(const PointSet& P, int n, const VerifyOptions& opts) {
  require_general_position(P);
  Certificate cert;
  cert.mode = Mode::GON;
  cert.n = n;
  cert.points = P;
  const OrderType o(P);
  const Chain big = largest_convex(o);
  if (big.size >= n) {
    cert.verdict = Verdict::NOT_FREE;
    cert.freeness_witness = Witness{std::nullopt, WitnessKind::GON, {big.indices.begin(), big.indices.begin() + n}};
    return cert;
  }
  const int m = static_cast<int>(P.size());
  cert.stats = run_cells(P, Mode::GON, opts, [&](const CellSample& c) { return good_gon(o, c, n, m); }, cert);
  return cert;
}

}  // namespace essat
