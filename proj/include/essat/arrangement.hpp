#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "essat/geometry.hpp"

namespace essat {

// CUPCAP arrangements include the vertical line through every point, since
// cups and caps depend on x-order; GON arrangements use spanned lines only.
enum class Mode { CUPCAP, GON };

std::string to_string(Mode mode);

// All lines through two points of P, deduplicated and sorted, plus the
// vertical lines through the points when requested.
std::vector<Line> spanned_lines(const PointSet& P, bool include_vertical);

// x-coordinates of all pairwise intersections of `lines` and of the points.
std::vector<Rational> critical_abscissas(const PointSet& P, const std::vector<Line>& lines);

// Number of faces of the arrangement: 1 + #lines + sum over vertices of
// (#lines through the vertex - 1).
std::size_t arrangement_cell_count(const std::vector<Line>& lines);

struct SampleOptions {
  // Replace each sample by the simplest rational point of its slab trapezoid.
  bool simplify = false;
};

// One representative sample per open cell, with the data the goodness
// checks need: q's lexicographic position among the points and the table
// qrow[i*m+j] = orientation(p_i, p_j, q).
struct CellSample {
  Point point;
  int pos = 0;
  std::vector<std::int8_t> qrow;
};

struct SweepStats {
  std::size_t n_samples = 0;  // slab abscissas x ordinates, before merging cells
  std::size_t n_cells = 0;
  std::size_t n_lines = 0;
};

// Sweeps the slabs between consecutive critical abscissas left to right and
// calls `visit` once per cell, at the leftmost slab the cell meets. A cell
// continues into the next slab exactly when no vertical line separates them
// and the same set of lines lies below it. `visit` returns false to stop.
SweepStats for_each_cell(const PointSet& P, Mode mode, const SampleOptions& opts,
                         const std::function<bool(CellSample&&)>& visit);

struct CellSampleSet {
  Mode mode = Mode::CUPCAP;
  std::vector<Line> lines;
  std::vector<Rational> critical_x;
  std::vector<Point> samples;
  SweepStats stats;
};

CellSampleSet sample_cells(const PointSet& P, Mode mode, const SampleOptions& opts = {});

enum class Verdict { SATURATED, NOT_FREE, NOT_SATURATED };
enum class WitnessKind { CUP, CAP, GON };

std::string to_string(Verdict v);
std::string to_string(WitnessKind k);

// Indices refer to the verified point set; the sample itself, when part of a
// witness, has index |P|. Cup and cap witnesses are listed in x-order.
struct Witness {
  std::optional<Point> sample;
  WitnessKind kind = WitnessKind::CUP;
  std::vector<int> indices;
};

struct Certificate {
  Verdict verdict = Verdict::SATURATED;
  Mode mode = Mode::CUPCAP;
  int k = 0;
  int l = 0;
  int n = 0;
  PointSet points;
  SweepStats stats;
  std::optional<Witness> freeness_witness;
  std::vector<Witness> witnesses;
  std::optional<Point> failure;

  nlohmann::ordered_json to_json() const;
};

struct VerifyOptions {
  int threads = 0;  // 0: ESSAT_THREADS, else hardware concurrency
  bool simplify = false;
  bool keep_witnesses = true;
  std::size_t chunk = 2048;  // cells evaluated per parallel batch
};

int resolve_threads(int requested);

// A k-cup or l-cap of P + {q} through q, or nothing.
std::optional<Witness> is_good_cupcap(const PointSet& P, const Point& q, int k, int l);
// An n-gon of P + {q} through q, or nothing.
std::optional<Witness> is_good_gon(const PointSet& P, const Point& q, int n);

Certificate verify_cupcap_saturated(const PointSet& P, int k, int l, const VerifyOptions& opts = {});
Certificate verify_gon_saturated(const PointSet& P, int n, const VerifyOptions& opts = {});

// Re-validates every witness of a certificate from coordinates alone.
bool recheck_witnesses(const Certificate& cert, std::string* why = nullptr);

}  // namespace essat
