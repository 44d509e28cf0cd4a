#include <gtest/gtest.h>

#include <regex>

#include "essat/constructions.hpp"
#include "essat/errors.hpp"
#include "essat/svg.hpp"

using namespace essat;

namespace {

std::size_t count(const std::string& s, const std::string& what) {
  std::size_t n = 0;
  for (auto at = s.find(what); at != std::string::npos; at = s.find(what, at + 1)) ++n;
  return n;
}

}  // namespace

TEST(Svg, OneDotPerPoint) {
  const auto svg = render_svg(base_cupcap_saturated(4, 5), {}, std::nullopt);
  EXPECT_EQ(count(svg, "<circle"), 8u);
  EXPECT_EQ(svg.find("<script"), std::string::npos);
  EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
}

TEST(Svg, CapWitnessBecomesPolyline) {
  const auto P = base_cupcap_saturated(4, 5);
  const auto cert = verify_cupcap_saturated(P, 4, 4);
  ASSERT_TRUE(cert.freeness_witness.has_value());
  const auto ws = witnesses_from_json(nlohmann::json::parse(cert.to_json().dump()));
  ASSERT_EQ(ws.size(), 1u);
  const auto h = highlight_of(P, ws[0]);
  EXPECT_FALSE(h.closed);
  const auto svg = render_svg(P, {h}, std::nullopt);
  EXPECT_EQ(count(svg, "<polyline"), 1u);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("points=\"([^\"]*)\"")));
  EXPECT_EQ(count(m[1].str(), ","), 4u);
}

TEST(Svg, PlacementDisks) {
  GonConstructionParams p;
  p.n = 5;
  const auto g = gon_saturated(p);
  const auto svg = render_svg(g.points, {}, g.report);
  EXPECT_EQ(count(svg, "<ellipse"), 4u);
  EXPECT_EQ(count(svg, "<circle"), 8u);
}

TEST(Svg, GonWitnessIsClosed) {
  const PointSet four{make_point(0, 0), make_point(6, 1), make_point(2, 5), make_point(3, 2)};
  Witness w;
  w.kind = WitnessKind::GON;
  w.indices = {0, 1, 2, 3};
  const auto h = highlight_of(four, w);
  EXPECT_TRUE(h.closed);
  EXPECT_EQ(h.points.size(), 4u);
}

TEST(Svg, BadHighlightDocument) {
  EXPECT_THROW(witnesses_from_json(nlohmann::json::parse(R"({"foo": 1})")), ParseError);
  EXPECT_THROW(witnesses_from_json(nlohmann::json::parse(R"({"kind": "blob", "indices": []})")), ParseError);
}
