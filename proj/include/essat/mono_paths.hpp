#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "essat/lattice.hpp"
#include "essat/rational.hpp"

namespace essat {

enum class Color : std::uint8_t { RED, BLUE };

char to_char(Color c);

// Number of t-subsets of an n-set; small arguments only.
std::size_t n_subsets(int n, int t);
// Colex rank of a strictly increasing tuple of 0-based vertices.
std::size_t colex_rank(std::span<const int> tuple);
std::vector<int> colex_unrank(std::size_t rank, int size);
// Advances a strictly increasing tuple over [0, n) to its colex successor.
// Returns false after the last one.
bool next_colex(std::vector<int>& tuple, int n);

// Red/blue coloring of the complete r-uniform hypergraph on the ordered
// vertex set 0 < 1 < ... < n-1. Edge colors are stored by colex rank.
class OrderedColoring {
 public:
  OrderedColoring(int r, int n, Color fill = Color::RED);
  OrderedColoring(int r, int n, std::vector<Color> colors);

  int r() const { return r_; }
  int n() const { return n_; }
  std::size_t n_edges() const { return colors_.size(); }

  Color color(std::span<const int> edge) const { return colors_[colex_rank(edge)]; }
  void set_color(std::span<const int> edge, Color c) { colors_[colex_rank(edge)] = c; }
  Color color_at(std::size_t rank) const { return colors_[rank]; }
  void set_color_at(std::size_t rank, Color c) { colors_[rank] = c; }
  const std::vector<Color>& colors() const { return colors_; }

  std::string color_string() const;
  // {"r": .., "n_vertices": .., "colors": "RB.."}
  nlohmann::ordered_json to_json() const;
  static OrderedColoring from_json(const nlohmann::json& j);

  bool operator==(const OrderedColoring&) const = default;

 private:
  int r_, n_;
  std::vector<Color> colors_;
};

OrderedColoring load_coloring(const std::string& path);
void save_coloring(const std::string& path, const OrderedColoring& H);

// Inserts a vertex at `position`; new edges take `fill`.
OrderedColoring insert_vertex(const OrderedColoring& H, int position, Color fill = Color::RED);

// Longest red/blue monotone path (in edges) ending at each (r-1)-tuple,
// indexed by colex rank.
struct PathLengths {
  std::vector<int> red, blue;
  int max_red = 0, max_blue = 0;
};

PathLengths longest_mono_paths(const OrderedColoring& H);
int longest_mono_path_ending_at(const OrderedColoring& H, Color c, std::span<const int> tuple);
// No red path with k edges and no blue path with l edges.
bool is_path_free(const OrderedColoring& H, int k, int l);

// Labels of every t-tuple, 1 <= t <= r-1. A t-tuple's label lives on level
// r+1-t of the lattice; (r-1)-tuples carry grid labels (1+red, 1+blue).
struct LabelTable {
  int r = 0, n = 0;
  std::vector<std::vector<std::size_t>> by_size;  // [t-1][colex rank]

  int level(int t) const { return r + 1 - t; }
  std::size_t at(std::span<const int> tuple) const {
    return by_size[tuple.size() - 1][colex_rank(tuple)];
  }
  std::size_t vertex(int v) const { return by_size[0][v]; }
};

// Requires lattice.top_level() == H.r() and H path-free for the lattice's
// (k, l). Checks the consecutive-tuple non-containment on the result.
LabelTable compute_labels(const OrderedColoring& H, const LabelLattice& lattice);

// First vertex label missing from H in the canonical order, which is a
// minimal missing label. Throws NoMissingLabel when every label occurs.
std::size_t find_missing_minimal_label(const OrderedColoring& H, const LabelLattice& lattice);

struct Extension {
  OrderedColoring coloring;
  int position;       // index of the new vertex
  std::size_t label;  // its label, a top-level lattice index
};

// Inserts one vertex carrying the minimal missing label and colors the new
// edges so that H stays path-free and every old label is unchanged.
Extension extend(const OrderedColoring& H, const LabelLattice& lattice);
Extension extend(const OrderedColoring& H, int k, int l);

// Graphs only.
bool is_transitive(const OrderedColoring& H);
// As extend, but edges where both colors are allowed are colored last so
// that the result stays transitive.
Extension extend_transitive(const OrderedColoring& H, const LabelLattice& lattice);
Extension extend_transitive(const OrderedColoring& H, int k, int l);

// Seidenberg's quadratic DP.
int longest_increasing(const std::vector<Rational>& seq);
int longest_decreasing(const std::vector<Rational>& seq);
// Pair i < j is RED when seq[i] < seq[j].
OrderedColoring coloring_of_sequence(const std::vector<Rational>& seq);

struct SequenceExtension {
  std::size_t position;
  Rational value;
  std::vector<Rational> sequence;
};

// Extends a sequence with no increasing k-subsequence and no decreasing
// l-subsequence by one element, keeping both properties.
SequenceExtension sequence_extend(const std::vector<Rational>& seq, int k, int l);
// Tries every insertion position and relative rank.
bool is_sequence_saturated(const std::vector<Rational>& seq, int k, int l);

std::vector<Rational> read_sequence(std::istream& in);
std::vector<Rational> load_sequence(const std::string& path);
void write_sequence(std::ostream& out, const std::vector<Rational>& seq);

struct BruteForceGuard {
  int max_n_r2 = 12;
  int max_n_r3 = 7;
  double max_leaves = 1e8;  // positions * 2^new_edges, for r >= 4
};

// H is path-free and every vertex insertion, under every coloring of the
// new edges, creates a red k-path or a blue l-path.
bool is_saturated_bruteforce(const OrderedColoring& H, int k, int l,
                             const BruteForceGuard& guard = {});

// Grows a path-free coloring by random insertions until it has `target`
// vertices or random insertions keep failing.
OrderedColoring random_path_free(int r, int k, int l, int target, std::mt19937_64& rng);

}  // namespace essat
