#include "essat/lattice.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "essat/errors.hpp"

namespace essat {

namespace {

// Lexicographic comparison of the increasing member sequences.
bool member_sequence_less(const Bitset& a, const Bitset& b) {
  auto i = a.find_first(), j = b.find_first();
  while (i != Bitset::npos && j != Bitset::npos) {
    if (i != j) return i < j;
    i = a.find_next(i);
    j = b.find_next(j);
  }
  return i == Bitset::npos && j != Bitset::npos;
}

}  // namespace

LabelLattice::LabelLattice(int k, int l, int top_level, std::size_t guard)
    : k_(k), l_(l), top_(top_level) {
  if (k < 1 || l < 1) throw PreconditionError("lattice needs k, l >= 1");
  if (top_level < 2) throw PreconditionError("lattice levels start at 2");
  for (int a = 1; a <= k; ++a) {
    for (int b = 1; b <= l; ++b) grid_.emplace_back(a, b);
  }
  {
    const std::size_t s = grid_.size();
    std::vector<Bitset> below(s, Bitset(s));
    for (std::size_t i = 0; i < s; ++i) {
      for (std::size_t j = 0; j < s; ++j) {
        if (grid_[j].first <= grid_[i].first && grid_[j].second <= grid_[i].second) below[i].set(j);
      }
    }
    below_.push_back(std::move(below));
  }

  for (int t = 3; t <= top_level; ++t) {
    const auto& prev_below = below_.back();
    const std::size_t s = prev_below.size();
    std::vector<Bitset> found;
    Bitset cur(s);
    // Elements are visited in a linear extension, so an element may join
    // only when everything strictly below it already has.
    std::function<void(std::size_t)> dfs = [&](std::size_t e) {
      if (e == s) {
        found.push_back(cur);
        if (found.size() > guard) {
          throw GuardExceeded("lattice level " + std::to_string(t) + " exceeds " +
                              std::to_string(guard) + " elements");
        }
        return;
      }
      dfs(e + 1);
      Bitset strict = prev_below[e];
      strict.reset(e);
      if (strict.is_subset_of(cur)) {
        cur.set(e);
        dfs(e + 1);
        cur.reset(e);
      }
    };
    dfs(0);
    std::sort(found.begin(), found.end(), [](const Bitset& a, const Bitset& b) {
      if (a.count() != b.count()) return a.count() < b.count();
      return member_sequence_less(a, b);
    });
    std::map<Bitset, std::size_t> lookup;
    for (std::size_t i = 0; i < found.size(); ++i) lookup.emplace(found[i], i);
    const std::size_t n = found.size();
    std::vector<Bitset> below(n, Bitset(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (found[j].is_subset_of(found[i])) below[i].set(j);
      }
    }
    levels_.push_back(std::move(found));
    lookup_.push_back(std::move(lookup));
    below_.push_back(std::move(below));
  }
}

std::size_t LabelLattice::size(int level) const {
  if (level == 2) return grid_.size();
  return levels_.at(level - 3).size();
}

const Bitset& LabelLattice::members(int level, std::size_t idx) const {
  if (level < 3) throw std::logic_error("level-2 labels are grid points");
  return levels_.at(level - 3).at(idx);
}

const Bitset& LabelLattice::below(int level, std::size_t idx) const {
  return below_.at(level - 2).at(idx);
}

bool LabelLattice::leq(int level, std::size_t a, std::size_t b) const {
  return below(level, b).test(a);
}

std::size_t LabelLattice::index_of(int level, const Bitset& members) const {
  const auto& lookup = lookup_.at(level - 3);
  const auto it = lookup.find(members);
  if (it == lookup.end()) throw std::logic_error("not a down-set of the lattice");
  return it->second;
}

std::string LabelLattice::describe(int level, std::size_t idx) const {
  if (level == 2) {
    return "(" + std::to_string(grid_[idx].first) + "," + std::to_string(grid_[idx].second) + ")";
  }
  std::string out = "{";
  const auto& m = members(level, idx);
  bool first = true;
  for (auto i = m.find_first(); i != Bitset::npos; i = m.find_next(i)) {
    if (!first) out += ",";
    out += describe(level - 1, i);
    first = false;
  }
  return out + "}";
}

}  // namespace essat
