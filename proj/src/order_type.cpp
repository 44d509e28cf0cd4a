#include "essat/order_type.hpp"

namespace essat {

OrderType::OrderType(const PointSet& P) : m_(static_cast<int>(P.size())) {
  const auto M = static_cast<std::size_t>(m_);
  table_.assign(M * M * M, 0);
  auto at = [&](int i, int j, int k) -> std::int8_t& { return table_[(i * M + j) * M + k]; };
  for (int i = 0; i < m_; ++i) {
    for (int j = i + 1; j < m_; ++j) {
      for (int k = j + 1; k < m_; ++k) {
        const auto s = static_cast<std::int8_t>(orientation(P[i], P[j], P[k]));
        at(i, j, k) = at(j, k, i) = at(k, i, j) = s;
        at(j, i, k) = at(i, k, j) = at(k, j, i) = static_cast<std::int8_t>(-s);
      }
    }
  }
}

ChainTables chain_tables(const OrderType& o, int turn) {
  ChainTables t;
  const int m = o.size();
  const auto M = static_cast<std::size_t>(m);
  t.m = m;
  t.turn = turn;
  t.g.assign(M * M, 0);
  t.h.assign(M * M, 0);
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < j; ++i) {
      int v = 2;
      for (int a = 0; a < i; ++a) {
        if (o(a, i, j) == turn) v = std::max(v, t.g[a * M + i] + 1);
      }
      t.g[i * M + j] = v;
    }
  }
  for (int i = m - 1; i >= 0; --i) {
    for (int j = m - 1; j > i; --j) {
      int v = 2;
      for (int b = j + 1; b < m; ++b) {
        if (o(i, j, b) == turn) v = std::max(v, t.h[j * M + b] + 1);
      }
      t.h[i * M + j] = v;
    }
  }
  return t;
}

Chain longest_chain_through(const OrderType& base, const ChainTables& t, const AugmentedOrder& a) {
  const int m = t.m;
  const auto M = static_cast<std::size_t>(m);
  const int turn = t.turn;
  const int pos = a.q();
  // Base indices < pos lie before q in the augmented order.
  std::vector<int> G(M, 0), Gp(M, -1), H(M, 0), Hn(M, -1);
  for (int x = 0; x < pos; ++x) {
    G[x] = 2;
    for (int i = 0; i < x; ++i) {
      if (a.q_orient(i, x) == turn && t.g[i * M + x] + 1 > G[x]) {
        G[x] = t.g[i * M + x] + 1;
        Gp[x] = i;
      }
    }
  }
  for (int y = pos; y < m; ++y) {
    H[y] = 2;
    for (int j = y + 1; j < m; ++j) {
      if (a.q_orient(y, j) == turn && t.h[y * M + j] + 1 > H[y]) {
        H[y] = t.h[y * M + j] + 1;
        Hn[y] = j;
      }
    }
  }
  int best = 1, bx = -1, by = -1;
  for (int x = 0; x < pos; ++x) {
    if (G[x] > best) best = G[x], bx = x, by = -1;
  }
  for (int y = pos; y < m; ++y) {
    if (H[y] > best) best = H[y], bx = -1, by = y;
  }
  for (int x = 0; x < pos; ++x) {
    for (int y = pos; y < m; ++y) {
      // orientation(p_x, q, p_y) = -orientation(p_x, p_y, q)
      if (-a.q_orient(x, y) == turn && G[x] + H[y] - 1 > best) {
        best = G[x] + H[y] - 1;
        bx = x;
        by = y;
      }
    }
  }

  std::vector<int> prefix, suffix;
  if (bx >= 0) {
    // Walk g backwards from the edge (Gp[bx], bx).
    prefix.push_back(bx);
    int cur = bx, prev = Gp[bx];
    while (prev >= 0) {
      prefix.push_back(prev);
      const int need = t.g[prev * M + cur] - 1;
      int next = -1;
      if (need >= 2) {
        for (int i = 0; i < prev; ++i) {
          if (base(i, prev, cur) == turn && t.g[i * M + prev] == need) {
            next = i;
            break;
          }
        }
      }
      cur = prev;
      prev = next;
    }
    std::reverse(prefix.begin(), prefix.end());
  }
  if (by >= 0) {
    suffix.push_back(by);
    int cur = by, next = Hn[by];
    while (next >= 0) {
      suffix.push_back(next);
      const int need = t.h[cur * M + next] - 1;
      int after = -1;
      if (need >= 2) {
        for (int j = next + 1; j < m; ++j) {
          if (base(cur, next, j) == turn && t.h[next * M + j] == need) {
            after = j;
            break;
          }
        }
      }
      cur = next;
      next = after;
    }
  }
  Chain out;
  out.size = best;
  for (int x : prefix) out.indices.push_back(a.from_base(x));
  out.indices.push_back(pos);
  for (int y : suffix) out.indices.push_back(a.from_base(y));
  return out;
}

}  // namespace essat
