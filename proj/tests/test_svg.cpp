#include <gtest/gtest.h>

#include "edgetess/catalog.hpp"
#include "edgetess/svg.hpp"
#include "support/oracles.hpp"

using namespace edgetess;
using edgetess::testing::svg_path_count;
using edgetess::testing::xml_well_formed;

TEST(RenderSvg, PathCountEqualsTileCount) {
  const Polygon eq = canonical_polygon(FamilyTag::Equilateral);
  EXPECT_EQ(svg_path_count(render_svg(expand(eq, 0))), 1u);
  EXPECT_EQ(svg_path_count(render_svg(expand(eq, 1))), 4u);
  const Patch hex = expand(canonical_polygon(FamilyTag::RegularHexagon), 3);
  const std::string svg = render_svg(hex);
  EXPECT_TRUE(xml_well_formed(svg));
  EXPECT_EQ(svg_path_count(svg), hex.tiles.size());
}

TEST(RenderSvg, SeedDrawnOnceInItsOwnFill) {
  const std::string svg = render_svg(expand(canonical_polygon(FamilyTag::Kite609012090), 2));
  boost::property_tree::ptree pt;
  ASSERT_TRUE(xml_well_formed(svg, &pt));
  std::size_t seeds = 0;
  for (const auto& [name, child] : pt.get_child("svg.g")) {
    if (name != "path") continue;
    if (child.get<std::string>("<xmlattr>.class") == "seed") {
      ++seeds;
      EXPECT_EQ(child.get<std::string>("<xmlattr>.fill"), RenderStyle{}.seed_fill);
    }
  }
  EXPECT_EQ(seeds, 1u);
  EXPECT_TRUE(pt.get_optional<std::string>("svg.<xmlattr>.viewBox"));
}

TEST(RenderSvg, ByteDeterministic) {
  const Polygon seed = canonical_polygon(FamilyTag::ThirtyRight);
  const std::string a = render_svg(expand(seed, 3));
  const std::string b = render_svg(expand(seed, 3, {7}));
  EXPECT_EQ(a, b);
}

TEST(RenderSvg, LabelsAndEscaping) {
  RenderStyle style;
  style.label_vertices = true;
  style.stroke = "a\"<b>";
  const std::string svg = render_svg(expand(canonical_polygon(FamilyTag::ThirtyRight), 1), style);
  EXPECT_TRUE(xml_well_formed(svg));
  EXPECT_NE(svg.find(">30</text>"), std::string::npos);
  EXPECT_NE(svg.find(">90</text>"), std::string::npos);
  EXPECT_NE(svg.find("a&quot;&lt;b&gt;"), std::string::npos);
}

TEST(RenderSvg, InvalidStyleThrows) {
  const Patch p = expand(canonical_polygon(FamilyTag::Equilateral), 1);
  RenderStyle s;
  s.scale = 0;
  EXPECT_THROW(render_svg(p, s), argument_out_of_range);
  s = {};
  s.stroke_width = -1;
  EXPECT_THROW(render_svg(p, s), argument_out_of_range);
}
