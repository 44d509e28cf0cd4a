#include "essat/mono_paths.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "essat/errors.hpp"

namespace essat {

namespace {

constexpr int kMaxBinom = 64;

const std::array<std::array<std::size_t, kMaxBinom + 1>, kMaxBinom + 1>& binom_table() {
  static const auto table = [] {
    std::array<std::array<std::size_t, kMaxBinom + 1>, kMaxBinom + 1> t{};
    for (int n = 0; n <= kMaxBinom; ++n) {
      t[n][0] = 1;
      for (int k = 1; k <= n; ++k) t[n][k] = t[n - 1][k - 1] + t[n - 1][k];
    }
    return t;
  }();
  return table;
}

std::vector<int> first_tuple(int t) {
  std::vector<int> v(t);
  for (int i = 0; i < t; ++i) v[i] = i;
  return v;
}

std::span<const int> head(const std::vector<int>& v) { return {v.data(), v.size() - 1}; }
std::span<const int> tail(const std::vector<int>& v) { return {v.data() + 1, v.size() - 1}; }

std::size_t grid_label(const LabelLattice& lattice, int red, int blue) {
  if (red + 1 > lattice.k() || blue + 1 > lattice.l()) {
    throw PreconditionError("coloring is not path-free for the lattice budgets");
  }
  return lattice.grid_index(red + 1, blue + 1);
}

void check_lattice(const OrderedColoring& H, const LabelLattice& lattice) {
  if (lattice.top_level() != H.r()) {
    throw PreconditionError("lattice top level must equal the uniformity");
  }
}

// Vertex `v` of H seen from H with a vertex inserted at p.
int shift(int v, int p) { return v < p ? v : v + 1; }
int unshift(int v, int p) { return v < p ? v : v - 1; }

// Position for a new vertex labelled M: right after the last vertex whose
// label lies below M.
int insertion_position(const LabelTable& labels, const LabelLattice& lattice, std::size_t M) {
  int pos = 0;
  for (int v = 0; v < labels.n; ++v) {
    if (lattice.leq(labels.level(1), labels.vertex(v), M)) pos = v + 1;
  }
  return pos;
}

// Labels for every tuple of H+ that agree with `labels` on old tuples, give
// the new vertex M, and keep consecutive tuples non-containing.
std::vector<std::vector<std::size_t>> potential_labels(const LabelTable& labels,
                                                       const LabelLattice& lattice, int p,
                                                       std::size_t M) {
  const int r = labels.r, m = labels.n + 1;
  std::vector<std::vector<std::size_t>> pot(r - 1);
  for (int t = 1; t <= r - 1; ++t) {
    pot[t - 1].resize(n_subsets(m, t));
    auto T = first_tuple(t);
    if (m < t) continue;
    do {
      const auto rank = colex_rank(T);
      if (!std::binary_search(T.begin(), T.end(), p)) {
        std::vector<int> old(T);
        for (auto& v : old) v = unshift(v, p);
        pot[t - 1][rank] = labels.at(old);
      } else if (t == 1) {
        pot[0][rank] = M;
      } else {
        const int lvl = r + 2 - t;  // level of the (t-1)-tuple labels
        Bitset diff = lattice.members(lvl, pot[t - 2][colex_rank(tail(T))]);
        diff -= lattice.members(lvl, pot[t - 2][colex_rank(head(T))]);
        const auto pick = diff.find_first();
        if (pick == Bitset::npos) throw std::logic_error("no potential label available");
        pot[t - 1][rank] = pick;
      }
    } while (next_colex(T, m));
  }
  return pot;
}

// Colors allowed for a new edge by the grid labels of its two (r-1)-windows.
struct Allowed {
  bool red, blue;
};

Allowed allowed_colors(const LabelLattice& lattice, std::size_t before, std::size_t after) {
  const auto [a1, b1] = lattice.grid(before);
  const auto [a2, b2] = lattice.grid(after);
  const Allowed out{a2 > a1, b2 > b1};
  if (!out.red && !out.blue) throw std::logic_error("consecutive labels are comparable");
  return out;
}

void check_extension(const OrderedColoring& H, const LabelTable& before,
                     const Extension& ext, const LabelLattice& lattice) {
  if (!is_path_free(ext.coloring, lattice.k(), lattice.l())) {
    throw std::logic_error("extension created a forbidden path");
  }
  const auto after = compute_labels(ext.coloring, lattice);
  for (int v = 0; v < H.n(); ++v) {
    if (after.vertex(shift(v, ext.position)) != before.vertex(v)) {
      throw std::logic_error("extension changed an old vertex label");
    }
  }
  if (after.vertex(ext.position) != ext.label) {
    throw std::logic_error("new vertex did not receive the missing label");
  }
}

}  // namespace

char to_char(Color c) { return c == Color::RED ? 'R' : 'B'; }

std::size_t n_subsets(int n, int t) {
  if (t < 0 || n < 0 || t > n) return 0;
  if (n > kMaxBinom) throw GuardExceeded("subset count beyond table");
  return binom_table()[n][t];
}

std::size_t colex_rank(std::span<const int> tuple) {
  std::size_t rank = 0;
  for (std::size_t i = 0; i < tuple.size(); ++i) rank += n_subsets(tuple[i], static_cast<int>(i) + 1);
  return rank;
}

std::vector<int> colex_unrank(std::size_t rank, int size) {
  std::vector<int> out(size);
  for (int i = size - 1; i >= 0; --i) {
    int c = i;
    while (n_subsets(c + 1, i + 1) <= rank) ++c;
    rank -= n_subsets(c, i + 1);
    out[i] = c;
  }
  return out;
}

bool next_colex(std::vector<int>& tuple, int n) {
  const int t = static_cast<int>(tuple.size());
  for (int i = 0; i < t; ++i) {
    const int limit = i + 1 < t ? tuple[i + 1] : n;
    if (tuple[i] + 1 < limit) {
      ++tuple[i];
      for (int j = 0; j < i; ++j) tuple[j] = j;
      return true;
    }
  }
  return false;
}

OrderedColoring::OrderedColoring(int r, int n, Color fill) : r_(r), n_(n) {
  if (r < 2) throw PreconditionError("uniformity must be at least 2");
  if (n < 0) throw PreconditionError("negative vertex count");
  colors_.assign(n_subsets(n, r), fill);
}

OrderedColoring::OrderedColoring(int r, int n, std::vector<Color> colors)
    : OrderedColoring(r, n) {
  if (colors.size() != colors_.size()) {
    throw PreconditionError("expected " + std::to_string(colors_.size()) + " edge colors, got " +
                            std::to_string(colors.size()));
  }
  colors_ = std::move(colors);
}

std::string OrderedColoring::color_string() const {
  std::string s;
  s.reserve(colors_.size());
  for (auto c : colors_) s += to_char(c);
  return s;
}

nlohmann::ordered_json OrderedColoring::to_json() const {
  nlohmann::ordered_json j;
  j["r"] = r_;
  j["n_vertices"] = n_;
  j["colors"] = color_string();
  return j;
}

OrderedColoring OrderedColoring::from_json(const nlohmann::json& j) {
  try {
    const int r = j.at("r").get<int>();
    const int n = j.at("n_vertices").get<int>();
    const auto s = j.at("colors").get<std::string>();
    if (r < 2 || n < 0) throw ParseError("bad r or n_vertices");
    std::vector<Color> colors;
    for (char ch : s) {
      if (ch == 'R') colors.push_back(Color::RED);
      else if (ch == 'B') colors.push_back(Color::BLUE);
      else throw ParseError(std::string("bad color character '") + ch + "'");
    }
    if (colors.size() != n_subsets(n, r)) throw ParseError("color string has wrong length");
    return OrderedColoring(r, n, std::move(colors));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

OrderedColoring load_coloring(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return OrderedColoring::from_json(j);
}

void save_coloring(const std::string& path, const OrderedColoring& H) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << H.to_json().dump(2) << '\n';
}

OrderedColoring insert_vertex(const OrderedColoring& H, int position, Color fill) {
  if (position < 0 || position > H.n()) throw PreconditionError("insert position out of range");
  OrderedColoring out(H.r(), H.n() + 1, fill);
  if (H.n() < H.r()) return out;
  auto e = first_tuple(H.r());
  do {
    std::vector<int> moved(e);
    for (auto& v : moved) v = shift(v, position);
    out.set_color(moved, H.color(e));
  } while (next_colex(e, H.n()));
  return out;
}

PathLengths longest_mono_paths(const OrderedColoring& H) {
  const int r = H.r(), n = H.n();
  PathLengths out;
  out.red.assign(n_subsets(n, r - 1), 0);
  out.blue.assign(out.red.size(), 0);
  if (n < r) return out;
  // Colex order finishes every edge ending at a tuple's prefix before any
  // edge ending at the tuple itself.
  auto e = first_tuple(r);
  std::size_t rank = 0;
  do {
    auto& len = H.color_at(rank) == Color::RED ? out.red : out.blue;
    const auto s = colex_rank(tail(e));
    len[s] = std::max(len[s], 1 + len[colex_rank(head(e))]);
    ++rank;
  } while (next_colex(e, n));
  for (int v : out.red) out.max_red = std::max(out.max_red, v);
  for (int v : out.blue) out.max_blue = std::max(out.max_blue, v);
  return out;
}

int longest_mono_path_ending_at(const OrderedColoring& H, Color c, std::span<const int> tuple) {
  if (static_cast<int>(tuple.size()) != H.r() - 1) throw PreconditionError("tuple size must be r-1");
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i] < 0 || tuple[i] >= H.n() || (i > 0 && tuple[i] <= tuple[i - 1])) {
      throw PreconditionError("tuple must be strictly increasing vertices");
    }
  }
  const auto paths = longest_mono_paths(H);
  return (c == Color::RED ? paths.red : paths.blue)[colex_rank(tuple)];
}

bool is_path_free(const OrderedColoring& H, int k, int l) {
  const auto p = longest_mono_paths(H);
  return p.max_red < k && p.max_blue < l;
}

LabelTable compute_labels(const OrderedColoring& H, const LabelLattice& lattice) {
  check_lattice(H, lattice);
  const int r = H.r(), n = H.n();
  LabelTable table;
  table.r = r;
  table.n = n;
  table.by_size.resize(r - 1);

  const auto paths = longest_mono_paths(H);
  auto& top = table.by_size[r - 2];
  top.resize(paths.red.size());
  for (std::size_t i = 0; i < top.size(); ++i) top[i] = grid_label(lattice, paths.red[i], paths.blue[i]);

  // A t-tuple's label collects everything below the labels of its
  // one-vertex-left extensions.
  for (int t = r - 2; t >= 1; --t) {
    const int lvl = table.level(t + 1);
    std::vector<Bitset> acc(n_subsets(n, t), Bitset(lattice.size(lvl)));
    if (n >= t + 1) {
      auto S = first_tuple(t + 1);
      do {
        acc[colex_rank(tail(S))] |= lattice.below(lvl, table.by_size[t][colex_rank(S)]);
      } while (next_colex(S, n));
    }
    auto& cur = table.by_size[t - 1];
    cur.resize(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) cur[i] = lattice.index_of(table.level(t), acc[i]);
  }

  for (int t = 1; t <= r - 1 && t + 1 <= n; ++t) {
    auto S = first_tuple(t + 1);
    do {
      const auto a = table.at(head(S)), b = table.at(tail(S));
      if (lattice.leq(table.level(t), b, a)) {
        throw std::logic_error("consecutive tuple labels are nested");
      }
    } while (next_colex(S, n));
  }
  return table;
}

std::size_t find_missing_minimal_label(const OrderedColoring& H, const LabelLattice& lattice) {
  const auto labels = compute_labels(H, lattice);
  std::vector<char> seen(lattice.size(H.r()), 0);
  for (int v = 0; v < H.n(); ++v) seen[labels.vertex(v)] = 1;
  const auto it = std::find(seen.begin(), seen.end(), 0);
  if (it == seen.end()) throw NoMissingLabel("every label is attained; the coloring is extremal");
  return static_cast<std::size_t>(it - seen.begin());
}

Extension extend(const OrderedColoring& H, const LabelLattice& lattice) {
  const auto labels = compute_labels(H, lattice);
  const auto M = find_missing_minimal_label(H, lattice);
  const int p = insertion_position(labels, lattice, M);
  const auto pot = potential_labels(labels, lattice, p, M);

  Extension ext{insert_vertex(H, p), p, M};
  const int r = H.r(), m = H.n() + 1;
  if (m >= r) {
    auto e = first_tuple(r);
    do {
      if (!std::binary_search(e.begin(), e.end(), p)) continue;
      const auto& grid = pot[r - 2];
      const auto ok = allowed_colors(lattice, grid[colex_rank(head(e))], grid[colex_rank(tail(e))]);
      ext.coloring.set_color(e, ok.red ? Color::RED : Color::BLUE);
    } while (next_colex(e, m));
  }
  check_extension(H, labels, ext, lattice);
  return ext;
}

Extension extend(const OrderedColoring& H, int k, int l) {
  return extend(H, LabelLattice(k, l, H.r()));
}

bool is_transitive(const OrderedColoring& H) {
  if (H.r() != 2) throw PreconditionError("transitivity is defined for graphs only");
  const int n = H.n();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      const Color ab = H.color(std::array{a, b});
      for (int c = b + 1; c < n; ++c) {
        if (ab == H.color(std::array{b, c}) && H.color(std::array{a, c}) != ab) return false;
      }
    }
  }
  return true;
}

Extension extend_transitive(const OrderedColoring& H, const LabelLattice& lattice) {
  if (H.r() != 2) throw PreconditionError("transitive extension is defined for graphs only");
  if (!is_transitive(H)) throw PreconditionError("coloring is not transitive");
  const auto labels = compute_labels(H, lattice);
  const auto M = find_missing_minimal_label(H, lattice);
  const int p = insertion_position(labels, lattice, M);

  Extension ext{insert_vertex(H, p), p, M};
  const int m = H.n() + 1;
  auto label_of = [&](int v) { return v == p ? M : labels.vertex(unshift(v, p)); };

  // Edges through p in lexicographic order; free ones wait.
  std::vector<std::array<int, 2>> deferred;
  std::vector<char> colored(n_subsets(m, 2), 1);
  for (int v = 0; v < m; ++v) {
    if (v == p) continue;
    const std::array e{std::min(v, p), std::max(v, p)};
    const auto ok = allowed_colors(lattice, label_of(e[0]), label_of(e[1]));
    if (ok.red && ok.blue) {
      deferred.push_back(e);
      colored[colex_rank(e)] = 0;
    } else {
      ext.coloring.set_color(e, ok.red ? Color::RED : Color::BLUE);
    }
  }

  auto col = [&](int a, int b) { return ext.coloring.color(std::array{a, b}); };
  auto known = [&](int a, int b) { return colored[colex_rank(std::array{a, b})] != 0; };
  for (const auto& [x, y] : deferred) {
    bool red_ok = true, blue_ok = true;
    auto forbid = [&](Color c) { (c == Color::RED ? red_ok : blue_ok) = false; };
    auto other = [](Color c) { return c == Color::RED ? Color::BLUE : Color::RED; };
    for (int u = 0; u < m; ++u) {
      if (u == x || u == y) continue;
      if (u < x) {  // edge is the second leg of u < x < y
        if (known(u, x) && known(u, y) && col(u, y) != col(u, x)) forbid(col(u, x));
      } else if (u < y) {  // edge is the long side of x < u < y
        if (known(x, u) && known(u, y) && col(x, u) == col(u, y)) forbid(other(col(x, u)));
      } else {  // edge is the first leg of x < y < u
        if (known(y, u) && known(x, u) && col(x, u) != col(y, u)) forbid(col(y, u));
      }
    }
    if (!red_ok && !blue_ok) {
      throw std::logic_error("both colors forbidden by transitivity at edge (" + std::to_string(x) +
                             "," + std::to_string(y) + ")");
    }
    ext.coloring.set_color(std::array{x, y}, red_ok ? Color::RED : Color::BLUE);
    colored[colex_rank(std::array{x, y})] = 1;
  }

  if (!is_transitive(ext.coloring)) throw std::logic_error("transitive extension is not transitive");
  check_extension(H, labels, ext, lattice);
  return ext;
}

Extension extend_transitive(const OrderedColoring& H, int k, int l) {
  return extend_transitive(H, LabelLattice(k, l, 2));
}

int longest_increasing(const std::vector<Rational>& seq) {
  std::vector<int> len(seq.size(), 1);
  int best = 0;
  for (std::size_t j = 0; j < seq.size(); ++j) {
    for (std::size_t i = 0; i < j; ++i) {
      if (seq[i] < seq[j]) len[j] = std::max(len[j], len[i] + 1);
    }
    best = std::max(best, len[j]);
  }
  return best;
}

int longest_decreasing(const std::vector<Rational>& seq) {
  std::vector<Rational> neg;
  neg.reserve(seq.size());
  for (const auto& v : seq) neg.push_back(-v);
  return longest_increasing(neg);
}

OrderedColoring coloring_of_sequence(const std::vector<Rational>& seq) {
  const int n = static_cast<int>(seq.size());
  OrderedColoring H(2, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (seq[i] == seq[j]) throw PreconditionError("sequence values must be distinct");
      H.set_color(std::array{i, j}, seq[i] < seq[j] ? Color::RED : Color::BLUE);
    }
  }
  return H;
}

namespace {

bool sequence_free(const std::vector<Rational>& seq, int k, int l) {
  return longest_increasing(seq) < k && longest_decreasing(seq) < l;
}

// A value realizing relative rank `rank` among `sorted`.
Rational value_at_rank(const std::vector<Rational>& sorted, std::size_t rank) {
  if (sorted.empty()) return Rational(0);
  if (rank == 0) return sorted.front() - 1;
  if (rank == sorted.size()) return sorted.back() + 1;
  return midpoint(sorted[rank - 1], sorted[rank]);
}

}  // namespace

SequenceExtension sequence_extend(const std::vector<Rational>& seq, int k, int l) {
  if (k < 2 || l < 2) throw PreconditionError("sequence budgets need k, l >= 2");
  const auto H = coloring_of_sequence(seq);
  if (!sequence_free(seq, k, l)) throw PreconditionError("sequence already has a forbidden subsequence");
  const auto ext = extend_transitive(H, LabelLattice(k - 1, l - 1, 2));

  const int p = ext.position;
  std::size_t rank = 0;
  for (int v = 0; v < ext.coloring.n(); ++v) {
    if (v < p && ext.coloring.color(std::array{v, p}) == Color::RED) ++rank;
    if (v > p && ext.coloring.color(std::array{p, v}) == Color::BLUE) ++rank;
  }
  auto sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  SequenceExtension out{static_cast<std::size_t>(p), value_at_rank(sorted, rank), seq};
  out.sequence.insert(out.sequence.begin() + p, out.value);
  if (coloring_of_sequence(out.sequence) != ext.coloring) {
    throw std::logic_error("inserted value does not realize the transitive coloring");
  }
  if (!sequence_free(out.sequence, k, l)) throw std::logic_error("sequence extension is not free");
  return out;
}

bool is_sequence_saturated(const std::vector<Rational>& seq, int k, int l) {
  if (!sequence_free(seq, k, l)) return false;
  auto sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t pos = 0; pos <= seq.size(); ++pos) {
    for (std::size_t rank = 0; rank <= seq.size(); ++rank) {
      auto longer = seq;
      longer.insert(longer.begin() + pos, value_at_rank(sorted, rank));
      if (sequence_free(longer, k, l)) return false;
    }
  }
  return true;
}

std::vector<Rational> read_sequence(std::istream& in) {
  std::vector<Rational> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ss(line);
    std::string tok, extra;
    if (!(ss >> tok)) continue;
    if (ss >> extra) throw ParseError("unexpected token '" + extra + "'", lineno);
    try {
      out.push_back(parse_rational(tok));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return out;
}

std::vector<Rational> load_sequence(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return read_sequence(in);
}

void write_sequence(std::ostream& out, const std::vector<Rational>& seq) {
  for (const auto& v : seq) out << to_string(v) << '\n';
}

bool is_saturated_bruteforce(const OrderedColoring& H, int k, int l, const BruteForceGuard& guard) {
  const int r = H.r(), n = H.n();
  const auto new_edges = n_subsets(n, r - 1);
  if ((r == 2 && n > guard.max_n_r2) || (r == 3 && n > guard.max_n_r3) ||
      (r > 3 && std::ldexp(double(n + 1), static_cast<int>(new_edges)) > guard.max_leaves)) {
    throw GuardExceeded("brute-force saturation check too large: N=" + std::to_string(n) +
                        ", r=" + std::to_string(r));
  }
  if (!is_path_free(H, k, l)) return false;

  const int m = n + 1;
  struct Edge {
    std::size_t prefix, suffix;
    bool fresh;
    Color color;
  };
  for (int p = 0; p <= n; ++p) {
    std::vector<Edge> edges;
    if (m >= r) {
      auto e = first_tuple(r);
      do {
        Edge ed{colex_rank(head(e)), colex_rank(tail(e)), false, Color::RED};
        if (std::binary_search(e.begin(), e.end(), p)) {
          ed.fresh = true;
        } else {
          std::vector<int> old(e);
          for (auto& v : old) v = unshift(v, p);
          ed.color = H.color(old);
        }
        edges.push_back(ed);
      } while (next_colex(e, m));
    }
    std::vector<int> red(n_subsets(m, r - 1), 0), blue(red.size(), 0);
    // True when some completion of the new edges stays path-free.
    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
      if (i == edges.size()) return true;
      const auto& ed = edges[i];
      for (Color c : {Color::RED, Color::BLUE}) {
        if (!ed.fresh && c != ed.color) continue;
        auto& len = c == Color::RED ? red : blue;
        const int limit = c == Color::RED ? k : l;
        const int cand = 1 + len[ed.prefix];
        if (cand >= limit) continue;
        const int saved = len[ed.suffix];
        len[ed.suffix] = std::max(saved, cand);
        const bool found = dfs(i + 1);
        len[ed.suffix] = saved;
        if (found) return true;
      }
      return false;
    };
    if (dfs(0)) return false;
  }
  return true;
}

OrderedColoring random_path_free(int r, int k, int l, int target, std::mt19937_64& rng) {
  constexpr int kTries = 64;
  OrderedColoring H(r, 0);
  std::bernoulli_distribution coin(0.5);
  while (H.n() < target) {
    bool grown = false;
    for (int attempt = 0; attempt < kTries && !grown; ++attempt) {
      const int p = std::uniform_int_distribution<int>(0, H.n())(rng);
      auto G = insert_vertex(H, p);
      if (G.n() >= r) {
        auto e = first_tuple(r);
        do {
          if (std::binary_search(e.begin(), e.end(), p)) {
            G.set_color(e, coin(rng) ? Color::RED : Color::BLUE);
          }
        } while (next_colex(e, G.n()));
      }
      if (is_path_free(G, k, l)) {
        H = std::move(G);
        grown = true;
      }
    }
    if (!grown) break;
  }
  return H;
}

}  // namespace essat
