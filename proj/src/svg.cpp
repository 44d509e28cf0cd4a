#include "essat/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "essat/errors.hpp"

namespace essat {

namespace {

constexpr std::size_t kMaxCellWitnesses = 32;

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "cup") w.kind = WitnessKind::CUP;
  else if (kind == "cap") w.kind = WitnessKind::CAP;
  else if (kind == "gon") w.kind = WitnessKind::GON;
  else throw ParseError("unknown witness kind '" + kind + "'");
  w.indices = j.at("indices").get<std::vector<int>>();
  if (j.contains("sample")) {
    const auto& s = j["sample"];
    w.sample = Point{parse_rational(s.at(0).get<std::string>()), parse_rational(s.at(1).get<std::string>())};
  }
  return w;
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(2);
  ss << std::fixed << v;
  return ss.str();
}

}  // namespace

Highlight highlight_of(const PointSet& P, const Witness& w) {
  Highlight h;
  const int m = static_cast<int>(P.size());
  for (int i : w.indices) {
    if (i == m && w.sample) h.points.push_back(*w.sample);
    else if (i >= 0 && i < m) h.points.push_back(P[i]);
    else throw PreconditionError("witness index " + std::to_string(i) + " out of range");
  }
  if (w.kind == WitnessKind::GON) {
    h.closed = true;
    double cx = 0, cy = 0;
    for (const auto& p : h.points) {
      cx += p.x.get_d();
      cy += p.y.get_d();
    }
    cx /= h.points.size();
    cy /= h.points.size();
    std::sort(h.points.begin(), h.points.end(), [&](const Point& a, const Point& b) {
      return std::atan2(a.y.get_d() - cy, a.x.get_d() - cx) < std::atan2(b.y.get_d() - cy, b.x.get_d() - cx);
    });
  } else {
    std::sort(h.points.begin(), h.points.end());
  }
  return h;
}

std::vector<Witness> witnesses_from_json(const nlohmann::json& j) {
  std::vector<Witness> out;
  try {
    if (j.is_array()) {
      for (const auto& w : j) out.push_back(witness_from_json(w));
    } else if (j.contains("indices")) {
      out.push_back(witness_from_json(j));
    } else if (j.contains("freeness_witness") && !j["freeness_witness"].is_null()) {
      out.push_back(witness_from_json(j["freeness_witness"]));
    } else if (j.contains("witnesses")) {
      for (const auto& w : j["witnesses"]) {
        if (out.size() == kMaxCellWitnesses) break;
        out.push_back(witness_from_json(w));
      }
    } else {
      throw ParseError("no witness found in highlight document");
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
  return out;
}

std::string render_svg(const PointSet& P, const std::vector<Highlight>& highlights,
                       const std::optional<PlacementReport>& report, const SvgOptions& opts) {
  double x0 = 0, x1 = 1, y0 = 0, y1 = 1;
  bool any = false;
  auto grow = [&](double x, double y) {
    if (!any) {
      x0 = x1 = x;
      y0 = y1 = y;
      any = true;
    }
    x0 = std::min(x0, x);
    x1 = std::max(x1, x);
    y0 = std::min(y0, y);
    y1 = std::max(y1, y);
  };
  for (const auto& p : P) grow(p.x.get_d(), p.y.get_d());
  for (const auto& h : highlights) {
    for (const auto& p : h.points) grow(p.x.get_d(), p.y.get_d());
  }
  const double r = report ? report->eps.get_d() : 0;
  if (report) {
    for (const auto& c : report->centers) {
      grow(c.x.get_d() - r, c.y.get_d() - r);
      grow(c.x.get_d() + r, c.y.get_d() + r);
    }
  }
  if (x1 - x0 < 1e-12) { x0 -= 1; x1 += 1; }
  if (y1 - y0 < 1e-12) { y0 -= 1; y1 += 1; }
  const double sx = (opts.width - 2 * opts.margin) / (x1 - x0);
  const double sy = (opts.height - 2 * opts.margin) / (y1 - y0);
  auto X = [&](double x) { return opts.margin + (x - x0) * sx; };
  auto Y = [&](double y) { return opts.height - opts.margin - (y - y0) * sy; };

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(opts.width)
      << "\" height=\"" << fmt(opts.height) << "\" viewBox=\"0 0 " << fmt(opts.width) << ' '
      << fmt(opts.height) << "\">\n"
      << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (report) {
    out << "<g fill=\"none\" stroke=\"#8888cc\" stroke-dasharray=\"4 3\">\n";
    for (const auto& c : report->centers) {
      out << "<ellipse cx=\"" << fmt(X(c.x.get_d())) << "\" cy=\"" << fmt(Y(c.y.get_d())) << "\" rx=\""
          << fmt(r * sx) << "\" ry=\"" << fmt(r * sy) << "\"/>\n";
    }
    out << "</g>\n";
  }
  static const char* palette[] = {"#d62728", "#1f77b4", "#2ca02c", "#ff7f0e", "#9467bd"};
  for (std::size_t i = 0; i < highlights.size(); ++i) {
    const auto& h = highlights[i];
    out << '<' << (h.closed ? "polygon" : "polyline") << " fill=\"none\" stroke=\"" << palette[i % 5]
        << "\" stroke-width=\"1.5\" points=\"";
    for (std::size_t j = 0; j < h.points.size(); ++j) {
      if (j) out << ' ';
      out << fmt(X(h.points[j].x.get_d())) << ',' << fmt(Y(h.points[j].y.get_d()));
    }
    out << "\"/>\n";
  }
  out << "<g fill=\"black\">\n";
  for (const auto& p : P) {
    out << "<circle cx=\"" << fmt(X(p.x.get_d())) << "\" cy=\"" << fmt(Y(p.y.get_d())) << "\" r=\""
        << fmt(opts.dot_radius) << "\"/>\n";
  }
  out << "</g>\n";
  for (const auto& h : highlights) {
    for (const auto& p : h.points) {
      if (std::find(P.begin(), P.end(), p) != P.end()) continue;
      out << "<circle cx=\"" << fmt(X(p.x.get_d())) << "\" cy=\"" << fmt(Y(p.y.get_d())) << "\" r=\""
          << fmt(opts.dot_radius) << "\" fill=\"none\" stroke=\"black\"/>\n";
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace essat
