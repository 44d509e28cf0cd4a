#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "essat/arrangement.hpp"
#include "essat/geometry.hpp"

namespace essat {

// True when base_cupcap_saturated(k, l) has a direct construction.
bool has_base_cupcap(int k, int l);

// Rows k <= 3 or l <= 3, plus (4,4), (4,5) and (5,4). Throws
// PreconditionError for other parameters.
PointSet base_cupcap_saturated(int k, int l);

// y -> -y. Cups become caps and vice versa.
PointSet reflect(const PointSet& P);

// Places B to the right of A (gap 1) and raises it until every point of A is
// strictly below every line spanned by B and every point of B strictly above
// every line spanned by A. The lift is the first power of two that works.
PointSet combine(const PointSet& A, const PointSet& B, Rational* lift = nullptr);

// Recursive (k,l)-cup-cap-saturated set: base cases where available,
// otherwise combine(cupcap_saturated(k-1, l), cupcap_saturated(k, l-1)).
// Sets of at most kRepairLimit points are additionally made very generic.
PointSet cupcap_saturated(int k, int l);
constexpr std::size_t kRepairLimit = 64;

// Size of cupcap_saturated(k, l), computed from the recursion alone.
Integer cupcap_saturated_size(int k, int l);
// C(k+l-4, k-2) - 2 C(k+l-8, k-4), with C(n, r) = 0 outside 0 <= r <= n.
Integer cupcap_upper_bound(int k, int l);
Integer binomial(int n, int r);

// (k,l)-cup-cap-free set of the maximum size C(k+l-4, k-2), built by the
// same combination step.
PointSet cupcap_free_extremal(int k, int l);

// (x, y) -> (x, delta * y).
PointSet flatten(const PointSet& P, const Rational& delta);

// Applies (x, y) -> (M x + y, M y) for the smallest power of two M, above
// every |slope| of P, that makes the image very generic. The map is an
// orientation-preserving affine map that keeps the x-order. Returns M = 0 if
// P is already very generic and leaves it unchanged.
PointSet very_generic_repair(const PointSet& P, Integer* M = nullptr);

enum class VerifyLevel { FREENESS_ONLY, FULL };

struct GonConstructionParams {
  int n = 5;
  Rational eps = Rational(1, 8);
  // One flattening factor per group; empty means eps / 2 for all.
  std::vector<Rational> delta;
  VerifyLevel level = VerifyLevel::FREENESS_ONLY;
  int max_attempts = 24;
  VerifyOptions verify;
};

struct PropertyResult {
  bool ok = true;
  std::string detail;  // first violation found, if any
};

struct PlacementReport {
  int n = 0;
  Rational eps;
  std::vector<Rational> delta;
  std::vector<int> group_sizes;
  std::vector<Point> centers;
  std::vector<Integer> shear;  // per group; 0 when no repair was needed
  std::vector<Rational> lift;  // combination lifts used while building groups
  PropertyResult disk, slope, hierarchy, crossing, extension;
  int attempts = 0;
  int largest_convex = 0;
  std::optional<Verdict> verdict;

  bool all_ok() const {
    return disk.ok && slope.ok && hierarchy.ok && crossing.ok && extension.ok;
  }
  nlohmann::ordered_json to_json() const;
  static PlacementReport from_json(const nlohmann::json& j);
};

struct GonConstruction {
  PointSet points;
  PlacementReport report;
  std::optional<Certificate> certificate;
};

// n-gon-saturated set from (i+1, n+1-i)-cup-cap-saturated groups placed
// near (i, i^2). Throws RetryBudgetExhausted if no tried delta works.
GonConstruction gon_saturated(const GonConstructionParams& params);

// Same placement with maximum-size cup-cap-free groups: the classical
// 2^(n-2)-point n-gon-free set.
GonConstruction es_free_construction(const GonConstructionParams& params);

// |gon_saturated(n)| from the recursion sizes.
Integer gon_saturated_size(int n);

// Runs the placement checks on given groups and deltas (for tests).
PlacementReport check_placement(const std::vector<PointSet>& placed, const Rational& eps,
                                const std::vector<Rational>& delta);

}  // namespace essat
