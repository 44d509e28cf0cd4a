#include <algorithm>

#include "essat/arrangement.hpp"

namespace essat {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::SATURATED: return "SATURATED";
    case Verdict::NOT_FREE: return "NOT_FREE";
    case Verdict::NOT_SATURATED: return "NOT_SATURATED";
  }
  return "?";
}

std::string to_string(WitnessKind k) {
  switch (k) {
    case WitnessKind::CUP: return "cup";
    case WitnessKind::CAP: return "cap";
    case WitnessKind::GON: return "gon";
  }
  return "?";
}

namespace {

nlohmann::ordered_json point_json(const Point& p) {
  return nlohmann::ordered_json::array({to_string(p.x), to_string(p.y)});
}

nlohmann::ordered_json witness_json(const Witness& w) {
  nlohmann::ordered_json j;
  if (w.sample) j["sample"] = point_json(*w.sample);
  j["kind"] = to_string(w.kind);
  j["indices"] = w.indices;
  return j;
}

}  // namespace

nlohmann::ordered_json Certificate::to_json() const {
  nlohmann::ordered_json j;
  j["verdict"] = to_string(verdict);
  j["mode"] = to_string(mode);
  if (mode == Mode::CUPCAP) j["params"] = {{"k", k}, {"l", l}};
  else j["params"] = {{"n", n}};
  j["n_points"] = points.size();
  auto pts = nlohmann::ordered_json::array();
  for (const auto& p : points) pts.push_back(point_json(p));
  j["points"] = pts;
  j["n_lines"] = stats.n_lines;
  j["n_samples"] = stats.n_samples;
  j["n_cells"] = stats.n_cells;
  j["freeness_witness"] = freeness_witness ? witness_json(*freeness_witness) : nullptr;
  auto ws = nlohmann::ordered_json::array();
  for (const auto& w : witnesses) ws.push_back(witness_json(w));
  j["witnesses"] = ws;
  if (failure) {
    j["failure"] = {{"sample", point_json(*failure)},
                    {"reason", mode == Mode::CUPCAP ? "no cup or cap through the sample"
                                                    : "no n-gon through the sample"}};
  } else {
    j["failure"] = nullptr;
  }
  return j;
}

bool recheck_witnesses(const Certificate& cert, std::string* why) {
  const int m = static_cast<int>(cert.points.size());
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  auto check = [&](const Witness& w) -> bool {
    std::vector<Point> pts;
    bool has_sample = false;
    for (int i : w.indices) {
      if (i == m && w.sample) {
        pts.push_back(*w.sample);
        has_sample = true;
      } else if (i >= 0 && i < m) {
        pts.push_back(cert.points[i]);
      } else {
        return fail("index out of range");
      }
    }
    if (w.sample && !has_sample) return fail("witness misses its sample");
    switch (w.kind) {
      case WitnessKind::CUP:
        return static_cast<int>(pts.size()) >= cert.k && is_cup(pts) ? true : fail("bad cup");
      case WitnessKind::CAP:
        return static_cast<int>(pts.size()) >= cert.l && is_cap(pts) ? true : fail("bad cap");
      case WitnessKind::GON:
        return static_cast<int>(pts.size()) >= cert.n && in_convex_position(pts) ? true
                                                                                  : fail("bad gon");
    }
    return false;
  };
  if (cert.freeness_witness && !check(*cert.freeness_witness)) return false;
  for (const auto& w : cert.witnesses) {
    if (!check(w)) return false;
  }
  return true;
}

}  // namespace essat
