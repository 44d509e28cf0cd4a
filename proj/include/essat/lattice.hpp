#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace essat {

using Bitset = boost::dynamic_bitset<>;

// The label lattice. Level 2 is the grid [k] x [l] under the componentwise
// order; level t > 2 consists of the down-sets of level t-1 under inclusion.
// Elements of every level are numbered in a canonical total order that
// extends the partial order: lexicographic (a, b) on level 2, and
// (cardinality, sorted member sequence) above. Index 0 is the bottom.
class LabelLattice {
 public:
  static constexpr std::size_t kDefaultGuard = 2'000'000;

  LabelLattice(int k, int l, int top_level, std::size_t guard = kDefaultGuard);

  int k() const { return k_; }
  int l() const { return l_; }
  int top_level() const { return top_; }
  std::size_t size(int level) const;

  // Level 2 only.
  std::pair<int, int> grid(std::size_t idx) const { return grid_[idx]; }
  std::size_t grid_index(int a, int b) const { return (a - 1) * l_ + (b - 1); }

  // Level >= 3: the member set over level-1 indices.
  const Bitset& members(int level, std::size_t idx) const;
  // All elements of `level` that are <= idx, as a bitset over that level.
  const Bitset& below(int level, std::size_t idx) const;
  bool leq(int level, std::size_t a, std::size_t b) const;
  // Index of a down-set given by its members; throws if it is not one.
  std::size_t index_of(int level, const Bitset& members) const;

  std::string describe(int level, std::size_t idx) const;

 private:
  int k_, l_, top_;
  std::vector<std::pair<int, int>> grid_;
  // levels_[t - 3]: members of each level-t element, in canonical order.
  std::vector<std::vector<Bitset>> levels_;
  std::vector<std::map<Bitset, std::size_t>> lookup_;
  // below_[t - 2]: down-closure of each level-t element.
  std::vector<std::vector<Bitset>> below_;
};

}  // namespace essat
