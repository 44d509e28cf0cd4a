#pragma once

// Combinatorial kernels. Every dynamic program here reads only the signs of
// orientations of a lexicographically sorted point sequence, so the same code
// serves a point set and a point set with one sample point spliced in.

#include <algorithm>
#include <cstdint>
#include <vector>

#include "essat/geometry.hpp"

namespace essat {

class OrderType {
 public:
  OrderType() = default;
  explicit OrderType(const PointSet& P);

  int size() const { return m_; }
  int operator()(int i, int j, int k) const {
    return table_[(static_cast<std::size_t>(i) * m_ + j) * m_ + k];
  }

 private:
  int m_ = 0;
  std::vector<std::int8_t> table_;
};

// A base order type with one extra point q at lexicographic position `pos`.
// `qrow[i * m + j]` is orientation(p_i, p_j, q) for base indices i, j.
class AugmentedOrder {
 public:
  AugmentedOrder(const OrderType& base, int pos, std::vector<std::int8_t> qrow)
      : base_(&base), m_(base.size()), pos_(pos), qrow_(std::move(qrow)) {}

  int size() const { return m_ + 1; }
  int q() const { return pos_; }
  int to_base(int i) const { return i < pos_ ? i : i - 1; }
  int from_base(int i) const { return i < pos_ ? i : i + 1; }
  int q_orient(int bi, int bj) const { return qrow_[static_cast<std::size_t>(bi) * m_ + bj]; }

  int operator()(int i, int j, int k) const {
    if (i == pos_) return q_orient(to_base(j), to_base(k));
    if (j == pos_) return -q_orient(to_base(i), to_base(k));
    if (k == pos_) return q_orient(to_base(i), to_base(j));
    return (*base_)(to_base(i), to_base(j), to_base(k));
  }

 private:
  const OrderType* base_;
  int m_;
  int pos_;
  std::vector<std::int8_t> qrow_;
};

constexpr int kCupTurn = 1;   // consecutive triples turn counterclockwise
constexpr int kCapTurn = -1;  // consecutive triples turn clockwise

// Longest chain whose consecutive triples all have orientation `turn`, with
// the lexicographically smallest index sequence among the longest.
template <class O>
Chain longest_chain(const O& o, int turn) {
  const int m = o.size();
  Chain out;
  if (m == 0) return out;
  if (m == 1) return {1, {0}};
  // h[i][j]: longest chain starting with the edge i -> j.
  std::vector<int> h(static_cast<std::size_t>(m) * m, 0);
  auto H = [&](int i, int j) -> int& { return h[static_cast<std::size_t>(i) * m + j]; };
  int best = 2;
  for (int j = m - 1; j >= 0; --j) {
    for (int i = j - 1; i >= 0; --i) {
      int v = 2;
      for (int k = j + 1; k < m; ++k) {
        if (o(i, j, k) == turn) v = std::max(v, H(j, k) + 1);
      }
      H(i, j) = v;
      best = std::max(best, v);
    }
  }
  out.size = best;
  int prev = -1, cur = -1;
  for (int i = 0; i < m && cur < 0; ++i) {
    for (int j = i + 1; j < m; ++j) {
      if (H(i, j) == best) {
        prev = i;
        cur = j;
        break;
      }
    }
  }
  out.indices = {prev, cur};
  for (int need = best - 1; need >= 2; --need) {
    for (int k = cur + 1; k < m; ++k) {
      if (o(prev, cur, k) == turn && H(cur, k) == need) {
        prev = cur;
        cur = k;
        out.indices.push_back(k);
        break;
      }
    }
  }
  return out;
}

// Forward and backward pair tables of a base order type, reused for every
// sample point when computing chains through that point.
struct ChainTables {
  int m = 0;
  int turn = 0;
  std::vector<int> g;  // g[i*m+j]: longest chain ending with edge i -> j
  std::vector<int> h;  // h[i*m+j]: longest chain starting with edge i -> j
};

ChainTables chain_tables(const OrderType& o, int turn);

// Longest chain of the augmented order containing q; indices are augmented.
Chain longest_chain_through(const OrderType& base, const ChainTables& t, const AugmentedOrder& a);

// Largest subset in convex position, optionally required to contain index
// `through`. Splitting a convex polygon at its lexicographically first and
// last vertices yields a lower chain turning counterclockwise and an upper
// chain turning clockwise with shared endpoints; the DP maximizes
// cup(s,t) + cap(s,t) - 2 over endpoint pairs.
template <class O>
Chain largest_convex(const O& o, int through = -1) {
  const int m = o.size();
  Chain out;
  if (m == 0) return out;
  if (through >= 0) out = {1, {through}};
  else out = {1, {0}};
  if (m == 1) return out;
  constexpr int kNone = -1000000;
  const auto M = static_cast<std::size_t>(m);

  // For a fixed start s, f[j*m+t] is the longest chain s .. j -> t, fq the same
  // restricted to chains containing `through`; pf/pfq are predecessors.
  struct Side {
    std::vector<int> f, fq, pf, pfq;
    std::vector<int> best, bestq, endj, endjq;
  };
  auto run = [&](int s, int turn, Side& sd) {
    sd.f.assign(M * M, kNone);
    sd.fq.assign(M * M, kNone);
    sd.pf.assign(M * M, -1);
    sd.pfq.assign(M * M, -1);
    sd.best.assign(M, kNone);
    sd.bestq.assign(M, kNone);
    sd.endj.assign(M, -1);
    sd.endjq.assign(M, -1);
    for (int t = s + 1; t < m; ++t) {
      sd.f[s * M + t] = 2;
      if (s == through || t == through) sd.fq[s * M + t] = 2;
    }
    for (int j = s + 1; j < m; ++j) {
      for (int t = j + 1; t < m; ++t) {
        int v = kNone, pv = -1, vq = kNone, pvq = -1;
        for (int i = s; i < j; ++i) {
          if (sd.f[i * M + j] == kNone || o(i, j, t) != turn) continue;
          if (sd.f[i * M + j] + 1 > v) {
            v = sd.f[i * M + j] + 1;
            pv = i;
          }
          const int base = (t == through) ? sd.f[i * M + j] : sd.fq[i * M + j];
          if (base != kNone && base + 1 > vq) {
            vq = base + 1;
            pvq = i;
          }
        }
        sd.f[j * M + t] = v;
        sd.pf[j * M + t] = pv;
        sd.fq[j * M + t] = vq;
        sd.pfq[j * M + t] = pvq;
      }
    }
    for (int t = s + 1; t < m; ++t) {
      for (int j = s; j < t; ++j) {
        if (sd.f[j * M + t] > sd.best[t]) {
          sd.best[t] = sd.f[j * M + t];
          sd.endj[t] = j;
        }
        if (sd.fq[j * M + t] > sd.bestq[t]) {
          sd.bestq[t] = sd.fq[j * M + t];
          sd.endjq[t] = j;
        }
      }
    }
  };
  auto trace = [&](const Side& sd, int s, int t, bool with_q) {
    std::vector<int> rev;
    int j = with_q ? sd.endjq[t] : sd.endj[t];
    int cur = t;
    bool need_q = with_q;
    rev.push_back(t);
    while (cur != s) {
      rev.push_back(j);
      if (j == s) break;
      const int i = need_q ? sd.pfq[j * M + cur] : sd.pf[j * M + cur];
      if (need_q && cur == through) need_q = false;
      cur = j;
      j = i;
    }
    std::reverse(rev.begin(), rev.end());
    return rev;
  };

  int best = out.size, bs = -1, bt = -1, which = 0;
  Side lo, hi;
  const int s_end = through >= 0 ? through + 1 : m;
  for (int s = 0; s < s_end; ++s) {
    run(s, kCupTurn, lo);
    run(s, kCapTurn, hi);
    const int t_begin = through >= 0 ? std::max(s + 1, through) : s + 1;
    for (int t = t_begin; t < m; ++t) {
      if (through < 0) {
        const int v = lo.best[t] + hi.best[t] - 2;
        if (v > best) best = v, bs = s, bt = t, which = 0;
      } else {
        const int v1 = lo.bestq[t] + hi.best[t] - 2;
        const int v2 = lo.best[t] + hi.bestq[t] - 2;
        if (lo.bestq[t] != kNone && v1 > best) best = v1, bs = s, bt = t, which = 1;
        if (hi.bestq[t] != kNone && v2 > best) best = v2, bs = s, bt = t, which = 2;
      }
    }
  }
  if (bs < 0) return out;
  run(bs, kCupTurn, lo);
  run(bs, kCapTurn, hi);
  const auto lower = trace(lo, bs, bt, which == 1);
  const auto upper = trace(hi, bs, bt, which == 2);
  std::vector<int> all(lower);
  all.insert(all.end(), upper.begin() + 1, upper.end() - 1);
  std::sort(all.begin(), all.end());
  out.size = best;
  out.indices = std::move(all);
  return out;
}

}  // namespace essat
