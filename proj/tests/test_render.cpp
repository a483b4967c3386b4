#include <gtest/gtest.h>

#include <regex>

#include "sweepmap/render.hpp"

namespace sweepmap {
namespace {

const PathDiagram kMixedDiagram({2, 2, 2, 0, -1, 3, 0, -4, -4}, {1, 4, 0, 3, 2, 4, 6, 4, 5});

std::size_t count_matches(const std::string& text, const std::string& pattern) {
  const std::regex re(pattern);
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re),
                                                std::sregex_iterator()));
}

TEST(RenderAscii, SmallDiagrams) {
  EXPECT_EQ(render_ascii(PathDiagram({1, -1}, {0, 1})), "0 |RB| 0\n");
  EXPECT_EQ(render_ascii(PathDiagram({2, -1, -1}, {0, 2, 1})), "1 |RB.| 0\n0 |R.B| 0\n");
  EXPECT_EQ(render_ascii(PathDiagram({0, 1, -1}, {0, 0, 1})), "0 |_RB| 0\n");
  EXPECT_EQ(render_ascii(PathDiagram{}), "(empty diagram)\n");
}

TEST(RenderAscii, MixedDiagramRows) {
  EXPECT_EQ(render_ascii(kMixedDiagram),
            "6 |.....R_..| 1\n"
            "5 |.R...R...| 2\n"
            "4 |.R...R..B| 1\n"
            "3 |..._...BB| -2\n"
            "2 |R......BB| -1\n"
            "1 |R.R.B..BB| -1\n"
            "0 |..R....B.| 0\n");
}

TEST(RenderSvg, MixedDiagramStructure) {
  const auto svg = render_svg(kMixedDiagram);
  EXPECT_EQ(svg.rfind("<svg ", 0), 0u);
  EXPECT_EQ(count_matches(svg, "class=\"arrow "), 9u);
  EXPECT_EQ(count_matches(svg, "class=\"arrow red\""), 4u);
  EXPECT_EQ(count_matches(svg, "class=\"arrow blue\""), 3u);
  EXPECT_EQ(count_matches(svg, "class=\"arrow purple\""), 2u);
  EXPECT_NE(svg.find("data-row=\"5\" x=\"440\" y=\"-215\" text-anchor=\"middle\">2</text>"), std::string::npos);
  EXPECT_NE(svg.find("data-row=\"3\" x=\"440\" y=\"-135\" text-anchor=\"middle\">-2</text>"), std::string::npos);
  EXPECT_NE(svg.find("data-column=\"8\" x1=\"8\" y1=\"4\" x2=\"9\" y2=\"0\""), std::string::npos);
  EXPECT_NE(svg.find("<text class=\"level\""), std::string::npos);
}

TEST(Render, Deterministic) {
  EXPECT_EQ(render_svg(kMixedDiagram), render_svg(kMixedDiagram));
  EXPECT_EQ(render_ascii(kMixedDiagram), render_ascii(kMixedDiagram));
  EXPECT_NO_THROW(render_svg(PathDiagram{}));
}

}  // namespace
}  // namespace sweepmap
