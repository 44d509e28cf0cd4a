#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "essat/errors.hpp"
#include "essat/mono_paths.hpp"
#include "oracles.hpp"

using namespace essat;

namespace {

constexpr Color R = Color::RED;
constexpr Color B = Color::BLUE;

// The five-vertex coloring with labels (1,1),(2,1),(1,2),(2,2),(2,3).
OrderedColoring five_vertex_example() {
  OrderedColoring H(2, 5);
  auto set = [&](int a, int b, Color c) { H.set_color(std::array{a - 1, b - 1}, c); };
  set(1, 2, R); set(1, 3, B); set(2, 3, B); set(1, 4, R); set(2, 4, B);
  set(3, 4, R); set(1, 5, B); set(2, 5, B); set(3, 5, R); set(4, 5, B);
  return H;
}

std::vector<std::string> vertex_labels(const OrderedColoring& H, const LabelLattice& L) {
  const auto t = compute_labels(H, L);
  std::vector<std::string> out;
  for (int v = 0; v < H.n(); ++v) out.push_back(L.describe(L.top_level(), t.vertex(v)));
  return out;
}

OrderedColoring all_red(int r, int n) { return OrderedColoring(r, n, R); }

}  // namespace

TEST(Colex, RankUnrankRoundTrip) {
  std::vector<int> t{0, 1, 2};
  std::size_t rank = 0;
  do {
    EXPECT_EQ(colex_rank(t), rank);
    EXPECT_EQ(colex_unrank(rank, 3), t);
    ++rank;
  } while (next_colex(t, 7));
  EXPECT_EQ(rank, n_subsets(7, 3));
  EXPECT_EQ(colex_rank(std::vector<int>{0, 2}), 1u);
  EXPECT_EQ(colex_rank(std::vector<int>{1, 2}), 2u);
  EXPECT_EQ(colex_rank(std::vector<int>{0, 3}), 3u);
}

TEST(Coloring, JsonRoundTrip) {
  const auto H = five_vertex_example();
  const auto j = H.to_json();
  EXPECT_EQ(j["r"], 2);
  EXPECT_EQ(j["n_vertices"], 5);
  EXPECT_EQ(j["colors"], H.color_string());
  EXPECT_EQ(OrderedColoring::from_json(nlohmann::json::parse(j.dump())), H);
}

TEST(Coloring, JsonErrors) {
  EXPECT_THROW(OrderedColoring::from_json(nlohmann::json::parse(R"({"r":2,"n_vertices":3,"colors":"RR"})")),
               ParseError);
  EXPECT_THROW(OrderedColoring::from_json(nlohmann::json::parse(R"({"r":2,"n_vertices":2,"colors":"X"})")),
               ParseError);
  EXPECT_THROW(OrderedColoring::from_json(nlohmann::json::parse(R"({"r":2})")), ParseError);
}

TEST(PathLengths, NoEdges) {
  const OrderedColoring H(3, 2);
  EXPECT_EQ(longest_mono_path_ending_at(H, R, std::vector<int>{0, 1}), 0);
  EXPECT_EQ(longest_mono_path_ending_at(H, B, std::vector<int>{0, 1}), 0);
  const LabelLattice L(2, 2, 3);
  EXPECT_EQ(L.describe(2, compute_labels(H, L).at(std::vector<int>{0, 1})), "(1,1)");
}

TEST(PathLengths, AllRedGraph) {
  const auto H = all_red(2, 6);
  for (int v = 0; v < 6; ++v) {
    EXPECT_EQ(longest_mono_path_ending_at(H, R, std::vector<int>{v}), v);
    EXPECT_EQ(longest_mono_path_ending_at(H, B, std::vector<int>{v}), 0);
  }
  EXPECT_FALSE(is_path_free(all_red(2, 4), 3, 3));
  EXPECT_TRUE(is_path_free(all_red(2, 3), 3, 1));
  EXPECT_TRUE(is_path_free(OrderedColoring(2, 0), 1, 1));
}

TEST(PathLengths, MatchExhaustiveEnumeration) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    const int r = std::uniform_int_distribution<int>(2, 4)(rng);
    const int n = std::uniform_int_distribution<int>(0, 7)(rng);
    const auto H = oracle::random_coloring(r, n, rng);
    const auto dp = longest_mono_paths(H);
    const auto ex = oracle::mono_paths(H);
    EXPECT_EQ(dp.red, ex.red);
    EXPECT_EQ(dp.blue, ex.blue);
  }
}

TEST(PathLengths, RejectsBadTuples) {
  const auto H = five_vertex_example();
  EXPECT_THROW(longest_mono_path_ending_at(H, R, std::vector<int>{0, 1}), PreconditionError);
  EXPECT_THROW(longest_mono_path_ending_at(H, R, std::vector<int>{7}), PreconditionError);
}

TEST(Labels, FiveVertexExample) {
  const auto H = five_vertex_example();
  const LabelLattice L(2, 3, 2);
  EXPECT_TRUE(is_path_free(H, 2, 3));
  EXPECT_EQ(vertex_labels(H, L), (std::vector<std::string>{"(1,1)", "(2,1)", "(1,2)", "(2,2)", "(2,3)"}));
  EXPECT_EQ(L.describe(2, find_missing_minimal_label(H, L)), "(1,3)");
}

TEST(Labels, ThreeUniformTwoVertices) {
  // The pair has no edges ending at it; the first vertex has nothing to its
  // left, the second collects everything below the pair's label.
  const OrderedColoring H(3, 2);
  const LabelLattice L(2, 2, 3);
  EXPECT_EQ(vertex_labels(H, L), (std::vector<std::string>{"{}", "{(1,1)}"}));
  const auto missing = find_missing_minimal_label(H, L);
  EXPECT_EQ(L.describe(3, missing), "{(1,1),(1,2)}");
}

TEST(Labels, DistinctAndConsecutiveNonNested) {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = 2 + trial % 2;
    const auto H = random_path_free(r, 3, 3, 8, rng);
    const LabelLattice L(3, 3, r);
    const auto t = compute_labels(H, L);
    std::set<std::size_t> seen;
    for (int v = 0; v < H.n(); ++v) EXPECT_TRUE(seen.insert(t.vertex(v)).second);
  }
}

TEST(Labels, RequirePathFreeness) {
  const LabelLattice L(2, 2, 2);
  EXPECT_THROW(compute_labels(all_red(2, 3), L), PreconditionError);
  EXPECT_THROW(compute_labels(all_red(3, 3), L), PreconditionError);
}

TEST(MissingLabel, SingleRedEdge) {
  OrderedColoring H(2, 2, R);
  const LabelLattice L(2, 2, 2);
  EXPECT_EQ(vertex_labels(H, L), (std::vector<std::string>{"(1,1)", "(2,1)"}));
  EXPECT_EQ(L.describe(2, find_missing_minimal_label(H, L)), "(1,2)");
}

TEST(MissingLabel, ThreeUniformSomeLabelAbsent) {
  const LabelLattice L(2, 2, 3);
  const OrderedColoring H(3, 2);
  const auto t = compute_labels(H, L);
  const auto m = find_missing_minimal_label(H, L);
  for (int v = 0; v < 2; ++v) EXPECT_NE(t.vertex(v), m);
}

TEST(Extend, FiveVertexExampleInsertsAfterThirdVertex) {
  const auto H = five_vertex_example();
  const LabelLattice L(2, 3, 2);
  const auto ext = extend(H, L);
  EXPECT_EQ(ext.position, 3);
  EXPECT_EQ(vertex_labels(ext.coloring, L),
            (std::vector<std::string>{"(1,1)", "(2,1)", "(1,2)", "(1,3)", "(2,2)", "(2,3)"}));
  // Blue from the three earlier vertices, red to the two later ones.
  const int p = ext.position;
  for (int v = 0; v < p; ++v) EXPECT_EQ(ext.coloring.color(std::array{v, p}), B);
  for (int v = p + 1; v < 6; ++v) EXPECT_EQ(ext.coloring.color(std::array{p, v}), R);
  EXPECT_TRUE(is_saturated_bruteforce(ext.coloring, 2, 3));
  EXPECT_THROW(extend(ext.coloring, L), NoMissingLabel);
}

TEST(Extend, FromEmptyGraphReachesGridSize) {
  OrderedColoring H(2, 0);
  for (;;) {
    try {
      H = extend(H, 3, 3).coloring;
    } catch (const NoMissingLabel&) {
      break;
    }
  }
  EXPECT_EQ(H.n(), 9);
  EXPECT_TRUE(is_saturated_bruteforce(H, 3, 3));
}

TEST(Extend, ThreeUniformFromThreeVertices) {
  std::mt19937_64 rng(5);
  const LabelLattice L(2, 2, 3);
  OrderedColoring H = random_path_free(3, 2, 2, 3, rng);
  ASSERT_EQ(H.n(), 3);
  for (;;) {
    try {
      H = extend(H, L).coloring;
    } catch (const NoMissingLabel&) {
      break;
    }
  }
  EXPECT_EQ(H.n(), 6);
  EXPECT_TRUE(is_saturated_bruteforce(H, 2, 2));
}

TEST(Extend, FourUniformKeepsInvariants) {
  const LabelLattice L(2, 2, 4);
  OrderedColoring H(4, 0);
  for (;;) {
    try {
      H = extend(H, L).coloring;
    } catch (const NoMissingLabel&) {
      break;
    }
    EXPECT_TRUE(oracle::path_free(H, 2, 2));
  }
  EXPECT_EQ(static_cast<std::size_t>(H.n()), L.size(4));
}

TEST(Extend, NonFreeInputRejected) {
  EXPECT_THROW(extend(all_red(2, 4), 3, 3), PreconditionError);
}

TEST(Transitive, Definitions) {
  EXPECT_TRUE(is_transitive(all_red(2, 5)));
  OrderedColoring H(2, 3);
  H.set_color(std::array{0, 1}, R);
  H.set_color(std::array{1, 2}, R);
  H.set_color(std::array{0, 2}, B);
  EXPECT_FALSE(is_transitive(H));
  EXPECT_THROW(is_transitive(OrderedColoring(3, 3)), PreconditionError);
  EXPECT_TRUE(is_transitive(five_vertex_example()));
}

TEST(Transitive, EveryPermutationGivesATransitiveColoring) {
  std::vector<int> perm{1, 2, 3, 4, 5};
  do {
    std::vector<Rational> seq(perm.begin(), perm.end());
    EXPECT_TRUE(is_transitive(coloring_of_sequence(seq)));
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST(Transitive, ExtendPermutationTwoOne) {
  auto H = coloring_of_sequence({Rational(2), Rational(1)});
  const LabelLattice L(2, 2, 2);
  for (int step = 0; step < 2; ++step) {
    H = extend_transitive(H, L).coloring;
    EXPECT_TRUE(is_transitive(H));
    EXPECT_TRUE(is_path_free(H, 2, 2));
  }
  EXPECT_EQ(H.n(), 4);
  EXPECT_THROW(extend_transitive(H, L), NoMissingLabel);
  EXPECT_TRUE(oracle::some_free_coloring(2, 4, 2, 2));
  EXPECT_FALSE(oracle::some_free_coloring(2, 5, 2, 2));
}

TEST(Transitive, FiveVertexExampleExtensionIsValid) {
  const auto ext = extend_transitive(five_vertex_example(), LabelLattice(2, 3, 2));
  EXPECT_EQ(ext.position, 3);
  EXPECT_TRUE(is_transitive(ext.coloring));
}

TEST(Transitive, RandomFuzzNeverGetsStuck) {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = std::uniform_int_distribution<int>(1, 4)(rng);
    const int l = std::uniform_int_distribution<int>(1, 4)(rng);
    const int len = std::uniform_int_distribution<int>(0, k * l)(rng);
    std::vector<Rational> seq;
    for (int i = 0; i < len; ++i) seq.emplace_back(std::uniform_int_distribution<long>(0, 1000000)(rng));
    std::sort(seq.begin(), seq.end());
    seq.erase(std::unique(seq.begin(), seq.end()), seq.end());
    std::shuffle(seq.begin(), seq.end(), rng);
    auto H = coloring_of_sequence(seq);
    if (!is_path_free(H, k, l)) continue;
    const LabelLattice L(k, l, 2);
    for (;;) {
      try {
        H = extend_transitive(H, L).coloring;
      } catch (const NoMissingLabel&) {
        break;
      }
      ASSERT_TRUE(is_transitive(H));
    }
    EXPECT_EQ(H.n(), k * l);
  }
}

TEST(Sequence, GrowsToExtremalLength) {
  std::vector<Rational> seq{Rational(1)};
  for (;;) {
    try {
      seq = sequence_extend(seq, 3, 3).sequence;
    } catch (const NoMissingLabel&) {
      break;
    }
    EXPECT_LT(longest_increasing(seq), 3);
    EXPECT_LT(longest_decreasing(seq), 3);
  }
  EXPECT_EQ(seq.size(), 4u);
  EXPECT_TRUE(oracle::sequence_saturated(seq, 3, 3));
}

TEST(Sequence, ExtremalSequenceCannotGrow) {
  const std::vector<Rational> seq{Rational(2), Rational(1), Rational(4), Rational(3)};
  EXPECT_THROW(sequence_extend(seq, 3, 3), NoMissingLabel);
  EXPECT_TRUE(oracle::sequence_saturated(seq, 3, 3));
  EXPECT_TRUE(is_sequence_saturated(seq, 3, 3));
}

TEST(Sequence, IncreasingPairWithKTwoIsNotFree) {
  // k = 2 forbids any increasing pair, so (1,2) is rejected outright, while
  // (2,1) with l = 3 is already extremal at (k-1)(l-1) = 2.
  EXPECT_THROW(sequence_extend({Rational(1), Rational(2)}, 2, 3), PreconditionError);
  EXPECT_THROW(sequence_extend({Rational(2), Rational(1)}, 2, 3), NoMissingLabel);
  EXPECT_TRUE(oracle::sequence_saturated({Rational(2), Rational(1)}, 2, 3));
  EXPECT_FALSE(oracle::sequence_saturated({Rational(1)}, 2, 3));
}

TEST(Sequence, ValuesAreMidpointsOrEndsOfGaps) {
  const auto ext = sequence_extend({Rational(1), Rational(3)}, 3, 3);
  const auto& v = ext.value;
  EXPECT_TRUE(v == 0 || v == 2 || v == 4);
  EXPECT_EQ(ext.sequence[ext.position], v);
}

TEST(Sequence, MonotoneLengthsMatchExhaustive) {
  std::mt19937_64 rng(24);
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<Rational> seq;
    const int n = std::uniform_int_distribution<int>(0, 9)(rng);
    for (int i = 0; i < n; ++i) seq.emplace_back(std::uniform_int_distribution<long>(-20, 20)(rng));
    EXPECT_EQ(longest_increasing(seq), oracle::longest_monotone(seq, +1));
    EXPECT_EQ(longest_decreasing(seq), oracle::longest_monotone(seq, -1));
  }
}

TEST(Sequence, ReadWrite) {
  std::istringstream in("1/2\n# note\n-3\n\n7\n");
  const auto seq = read_sequence(in);
  ASSERT_EQ(seq.size(), 3u);
  std::ostringstream out;
  write_sequence(out, seq);
  EXPECT_EQ(out.str(), "1/2\n-3\n7\n");
  std::istringstream bad("1\n2 3\n");
  EXPECT_THROW(read_sequence(bad), ParseError);
}

TEST(BruteForce, MissingLabelMeansNotSaturated) {
  std::mt19937_64 rng(25);
  for (int trial = 0; trial < 30; ++trial) {
    const auto H = random_path_free(2, 3, 3, 1 + trial % 8, rng);
    const LabelLattice L(3, 3, 2);
    bool missing = true;
    try {
      find_missing_minimal_label(H, L);
    } catch (const NoMissingLabel&) {
      missing = false;
    }
    EXPECT_EQ(is_saturated_bruteforce(H, 3, 3), !missing);
  }
}

TEST(BruteForce, DegenerateBudgets) {
  // With k = l = 1 a single edge is already a forbidden path: the empty
  // graph can still take a vertex, the one-vertex graph cannot.
  EXPECT_FALSE(is_saturated_bruteforce(OrderedColoring(2, 0), 1, 1));
  EXPECT_TRUE(is_saturated_bruteforce(OrderedColoring(2, 1), 1, 1));
  EXPECT_EQ(LabelLattice(1, 1, 2).size(2), 1u);
}

TEST(BruteForce, Guards) {
  EXPECT_THROW(is_saturated_bruteforce(OrderedColoring(2, 13), 20, 20), GuardExceeded);
  EXPECT_THROW(is_saturated_bruteforce(OrderedColoring(3, 8), 20, 20), GuardExceeded);
  BruteForceGuard loose;
  loose.max_n_r2 = 13;
  EXPECT_NO_THROW(is_saturated_bruteforce(all_red(2, 2), 5, 5, loose));
}
