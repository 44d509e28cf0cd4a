#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "essat/arrangement.hpp"
#include "essat/constructions.hpp"
#include "essat/geometry.hpp"

namespace essat {

struct SvgOptions {
  double width = 640;
  double height = 480;
  double margin = 24;
  double dot_radius = 3;
};

// Witness drawing: cups and caps as polylines in x-order, gons as closed
// polygons in angular order.
struct Highlight {
  std::vector<Point> points;
  bool closed = false;
};

Highlight highlight_of(const PointSet& P, const Witness& w);

// Reads witnesses from a JSON document: a single witness object, an array
// of them, or a certificate (its freeness witness, else its cell witnesses).
std::vector<Witness> witnesses_from_json(const nlohmann::json& j);

// Plain SVG 1.1. Axes are scaled independently, so placement disks appear
// as ellipses.
std::string render_svg(const PointSet& P, const std::vector<Highlight>& highlights,
                       const std::optional<PlacementReport>& report, const SvgOptions& opts = {});

}  // namespace essat
