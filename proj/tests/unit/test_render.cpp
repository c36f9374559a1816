#include <algorithm>
#include <regex>

#include <gtest/gtest.h>

#include "alcove/bruhat.hpp"
#include "alcove/render.hpp"
#include "support.hpp"

using namespace alcove;
using alcove::testing::el;

namespace {

long count(const std::string& s, const std::string& needle) {
  long n = 0;
  for (auto p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++n;
  return n;
}

}  // namespace

TEST(Render, EmptySceneIsBackgroundOnly) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    const std::string svg = render_svg(ctx, Scene{});
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("version=\"1.1\""), std::string::npos);
    EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
    EXPECT_TRUE(filled_words(svg).empty());
    EXPECT_EQ(count(svg, "<g"), count(svg, "</g>"));
    EXPECT_EQ(svg.find("-0.000000"), std::string::npos);
    EXPECT_EQ(svg.find("nan"), std::string::npos);
  }
  EXPECT_THROW(render_svg(GroupContext("A2~"), Scene{-1, {}, false}), PreconditionError);
}

TEST(Render, ShadowSceneFillsFourAlcoves) {
  const GroupContext a2("A2~");
  const std::string svg = render_svg(a2, set_scene(a2, shadow(a2, el(a2, "01"))));
  auto words = filled_words(svg);
  std::sort(words.begin(), words.end());
  EXPECT_EQ(words, (std::vector<std::string>{"0", "01", "1", "e"}));
}

TEST(Render, Deterministic) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    const Element w = el(ctx, tag == "A1~" ? "010" : "021020");
    Scene s = annex_scene(ctx, annex(ctx, w));
    s.labels = true;
    s.layers.push_back(GalleryLayer{parse_gallery(ctx, "01~0", ctx.identity())});
    if (tag != "A1~") s.layers.push_back(HyperplaneLayer{ctx.base_wall(0)});
    EXPECT_EQ(render_svg(ctx, s), render_svg(GroupContext(tag), s)) << tag;
  }
}

TEST(Render, AdjacentAlcovesShareOneEdge) {
  // The tiling emits each edge once: E = (3 F + boundary edges) / 2.
  const GroupContext a2("A2~");
  Scene s;
  s.radius = 3;
  const std::string svg = render_svg(a2, s);
  const auto start = svg.find("<g class=\"tiling\"");
  const auto end = svg.find("</g>", start);
  const long lines = count(svg.substr(start, end - start), "<line");
  const long faces = static_cast<long>(enumerate_by_length(a2, 3).size());
  long inner = 0;
  const auto elems = enumerate_by_length(a2, 3);
  const ElementSet in(elems.begin(), elems.end());
  for (const auto& x : elems) {
    for (int i = 0; i < 3; ++i) inner += in.contains(a2.mul_simple_right(x, i));
  }
  EXPECT_EQ(lines, 3 * faces - inner / 2);
}

TEST(Render, AnnexSceneShadesTheAnnex) {
  const GroupContext a2("A2~");
  const Annex a = annex(a2, el(a2, "021020"));
  const std::string svg = render_svg(a2, annex_scene(a2, a));
  auto words = filled_words(svg);
  std::vector<std::string> expected;
  for (const auto& y : sorted_canonically(a2, a.members)) expected.push_back(to_word_string(a2, y).empty() ? "e" : to_word_string(a2, y));
  EXPECT_EQ(words, expected);
  EXPECT_EQ(count(svg, "class=\"layer-panels\""), 2);
}

TEST(Render, FoldedGalleryDoublesBack) {
  const GroupContext a2("A2~");
  Scene s;
  s.layers.push_back(GalleryLayer{parse_gallery(a2, "0~", a2.identity())});
  const std::string svg = render_svg(a2, s);
  std::smatch m;
  ASSERT_TRUE(std::regex_search(svg, m, std::regex("class=\"layer-gallery\" data-gallery=\"0~\" points=\"([^\"]*)\"")));
  const std::string pts = m[1].str();
  // Start and end at the same barycenter.
  const auto first = pts.substr(0, pts.find(' '));
  const auto last = pts.substr(pts.rfind(' ') + 1);
  EXPECT_EQ(first, last);
  EXPECT_NE(svg.find("marker-end=\"url(#arrow-0)\""), std::string::npos);
}
