#include <gtest/gtest.h>

#include "alcove/bruhat.hpp"
#include "alcove/galleries.hpp"
#include "support.hpp"

using namespace alcove;
using alcove::testing::el;
using alcove::testing::wd;

TEST(Galleries, FormatRoundTrip) {
  const GroupContext a2("A2~");
  const Gallery g = parse_gallery(a2, "01~20", a2.identity());
  EXPECT_EQ(g.size(), 4u);
  EXPECT_EQ(g.fold_set(), (std::vector<int>{2}));
  EXPECT_EQ(g.type_word(), (Word{0, 1, 2, 0}));
  EXPECT_FALSE(g.unfolded());
  EXPECT_EQ(format_gallery(g), "01~20");
  EXPECT_EQ(format_gallery(parse_gallery(a2, "", a2.identity())), "");
  EXPECT_THROW(parse_gallery(a2, "~01", a2.identity()), InvalidWordError);
  EXPECT_THROW(parse_gallery(a2, "013", a2.identity()), InvalidWordError);
  EXPECT_THROW(parse_gallery(a2, "0~~1", a2.identity()), InvalidWordError);
}

TEST(Galleries, FoldsStayPut) {
  const GroupContext a2("A2~");
  const Gallery g = multifold(gallery_from_word(a2.identity(), Word{0, 1, 2, 0}), {2});
  const auto cells = alcove_sequence(a2, g);
  ASSERT_EQ(cells.size(), 5u);
  EXPECT_EQ(cells[1], cells[2]);
  EXPECT_EQ(end_alcove(a2, g), el(a2, "020"));
  EXPECT_EQ(format_gallery(footprint(g)), "020");
  EXPECT_EQ(multifold(g, {2}), gallery_from_word(a2.identity(), Word{0, 1, 2, 0}));
  EXPECT_THROW(multifold(g, {0}), PreconditionError);
  EXPECT_THROW(multifold(g, {5}), PreconditionError);
}

TEST(Galleries, LeftTranslation) {
  const GroupContext g2("G2~");
  const Element x = el(g2, "0121");
  const Gallery g = parse_gallery(g2, "2~10", g2.identity());
  const Gallery moved = left_translate(g2, x, g);
  const auto a = alcove_sequence(g2, g), b = alcove_sequence(g2, moved);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) EXPECT_EQ(b[k], g2.multiply(x, a[k]));
}

TEST(Galleries, CrossingCountsAlongReducedGalleries) {
  // A reduced gallery crosses each separating wall exactly once and no other wall.
  for (const auto& tag : alcove::testing::plane_types()) {
    const GroupContext ctx(tag);
    for (const auto& w : enumerate_by_length(ctx, 6)) {
      const Gallery g = gallery_from_word(ctx.identity(), reduced_word(ctx, w));
      const auto walls = panel_walls(ctx, g);
      ASSERT_EQ(walls.size(), g.size());
      for (const auto& h : walls) EXPECT_EQ(crossing_count(ctx, g, h), 1) << tag << " " << wd(ctx, w);
      EXPECT_EQ(end_alcove(ctx, g), w);
    }
  }
  const GroupContext a2("A2~");
  EXPECT_THROW(crossing_count(a2, parse_gallery(a2, "0~", a2.identity()), a2.base_wall(0)), PreconditionError);
  EXPECT_EQ(crossing_count(a2, parse_gallery(a2, "00", a2.identity()), a2.base_wall(0)), 2);
}

TEST(Galleries, FoldingShadowIsBruhatShadow) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    for (const auto& w : enumerate_by_length(ctx, 5)) {
      EXPECT_EQ(shadow_via_foldings(ctx, w), shadow(ctx, w)) << tag << " " << wd(ctx, w);
      for (const auto& r : reduced_words(ctx, w)) EXPECT_EQ(shadow_via_foldings_word(ctx, r), shadow(ctx, w));
    }
  }
  const GroupContext a2("A2~");
  EXPECT_THROW(shadow_via_foldings(a2, el(a2, "0120120120120"), 12), CapExceededError);
}
