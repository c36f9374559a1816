#include <algorithm>
#include <map>
#include <set>

#include <gtest/gtest.h>

#include "alcove/group.hpp"
#include "support.hpp"

using namespace alcove;
using alcove::testing::el;
using alcove::testing::wd;

namespace {

// Coefficients of prod_i (1 + t + ... + t^{e_i}) / (1 - t^{e_i}) up to t^n.
std::vector<long> bott_series(const std::vector<int>& exponents, int n) {
  std::vector<long> s(n + 1, 0);
  s[0] = 1;
  for (int e : exponents) {
    std::vector<long> next(n + 1, 0);
    for (int k = 0; k <= n; ++k) {
      for (int j = 0; j <= e && k + j <= n; ++j) next[k + j] += s[k];
    }
    // Divide by 1 - t^e.
    for (int k = e; k <= n; ++k) next[k] += next[k - e];
    s = next;
  }
  return s;
}

const std::map<std::string, std::vector<int>> kExponents{
    {"A2~", {1, 2}}, {"C2~", {1, 3}}, {"G2~", {1, 5}}, {"A1~", {1}}};

}  // namespace

TEST(Group, ShellSizesMatchBottSeries) {
  for (const auto& [tag, exps] : kExponents) {
    const GroupContext ctx(tag);
    const int n = 14;
    const auto shells = enumerate_shells(ctx, n);
    const auto expected = bott_series(exps, n);
    ASSERT_EQ(shells.size(), expected.size());
    for (int k = 0; k <= n; ++k) EXPECT_EQ(static_cast<long>(shells[k].size()), expected[k]) << tag << " k=" << k;
  }
}

TEST(Group, FiniteWeylGroupOrders) {
  EXPECT_EQ(GroupContext("A2~").finite_order(), 6);
  EXPECT_EQ(GroupContext("C2~").finite_order(), 8);
  EXPECT_EQ(GroupContext("G2~").finite_order(), 12);
  EXPECT_EQ(GroupContext("A1~").finite_order(), 2);
}

TEST(Group, CoxeterMatrix) {
  auto off_diagonal = [](const GroupContext& ctx) {
    std::multiset<int> m;
    for (int i = 0; i < 3; ++i) {
      for (int j = i + 1; j < 3; ++j) m.insert(ctx.coxeter_entry(i, j));
    }
    return m;
  };
  EXPECT_EQ(off_diagonal(GroupContext("A2~")), (std::multiset<int>{3, 3, 3}));
  EXPECT_EQ(off_diagonal(GroupContext("C2~")), (std::multiset<int>{2, 4, 4}));
  EXPECT_EQ(off_diagonal(GroupContext("G2~")), (std::multiset<int>{2, 3, 6}));
  const GroupContext a1("A1~");
  EXPECT_EQ(a1.coxeter_entry(0, 1), 0);  // infinite
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    for (int i = 0; i < ctx.num_generators(); ++i) EXPECT_EQ(ctx.coxeter_entry(i, i), 1);
  }
}

TEST(Group, GeneratorsAreInvolutionsAndBraid) {
  for (const auto& tag : alcove::testing::plane_types()) {
    const GroupContext ctx(tag);
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(ctx.mul_simple_right(ctx.generator(i), i), ctx.identity());
      for (int j = 0; j < 3; ++j) {
        const int m = ctx.coxeter_entry(i, j);
        Word a, b;
        for (int k = 0; k < m; ++k) {
          a.push_back(k % 2 ? j : i);
          b.push_back(k % 2 ? i : j);
        }
        EXPECT_EQ(from_word(ctx, a), from_word(ctx, b)) << tag << " " << i << j;
      }
    }
  }
}

TEST(Group, LengthExamples) {
  const GroupContext a2("A2~");
  EXPECT_EQ(length(a2, el(a2, "010")), 3);
  EXPECT_EQ(length(a2, el(a2, "")), 0);
  EXPECT_EQ(length(a2, el(a2, "e")), 0);
  EXPECT_EQ(length(a2, el(a2, "00")), 0);
  EXPECT_EQ(length(a2, el(a2, "0120102")), 7);
  EXPECT_EQ(el(a2, "010"), el(a2, "101"));
  const GroupContext c2("C2~");
  EXPECT_EQ(length(c2, el(c2, "1212")), 4);
  EXPECT_EQ(length(c2, el(c2, "12121")), 3);
}

TEST(Group, LengthCountsSeparatingWalls) {
  // Independent count: walls H_{g,k} strictly between the barycenters of e and x.
  for (const auto& tag : alcove::testing::plane_types()) {
    const GroupContext ctx(tag);
    const RootSystem& rs = ctx.roots();
    for (const auto& x : enumerate_by_length(ctx, 7)) {
      const RationalPoint b = ctx.barycenter(x);
      int walls = 0;
      for (const auto& g : rs.positive_roots()) {
        const Rational here = rs.pairing(b, g), base = rs.pairing(rs.alcove_barycenter(), g);
        const Rational lo = std::min(here, base), hi = std::max(here, base);
        for (Int k = -20; k <= 20; ++k) {
          if (lo < Rational(k) && Rational(k) < hi) ++walls;
        }
      }
      EXPECT_EQ(length(ctx, x), walls) << tag << " " << wd(ctx, x);
    }
  }
}

TEST(Group, ReducedWordsDenoteTheElement) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    for (const auto& x : enumerate_by_length(ctx, 6)) {
      const Word w = reduced_word(ctx, x);
      EXPECT_EQ(static_cast<int>(w.size()), length(ctx, x));
      EXPECT_EQ(from_word(ctx, w), x);
      EXPECT_EQ(el(ctx, format_word(w)), x);
      const auto all = reduced_words(ctx, x);
      EXPECT_TRUE(std::find(all.begin(), all.end(), w) != all.end());
      for (const auto& r : all) EXPECT_EQ(from_word(ctx, r), x);
    }
  }
  const GroupContext a2("A2~");
  EXPECT_EQ(reduced_words(a2, el(a2, "121")).size(), 2u);
}

TEST(Group, InverseAndMultiply) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    const auto elems = enumerate_by_length(ctx, 4);
    for (const auto& x : elems) {
      EXPECT_EQ(ctx.multiply(x, ctx.inverse(x)), ctx.identity());
      EXPECT_EQ(length(ctx, ctx.inverse(x)), length(ctx, x));
      for (const auto& y : elems) {
        Word wx = reduced_word(ctx, x), wy = reduced_word(ctx, y);
        wx.insert(wx.end(), wy.begin(), wy.end());
        EXPECT_EQ(ctx.multiply(x, y), from_word(ctx, wx));
      }
    }
  }
}

TEST(Group, DescentsMatchLengthDrops) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    for (const auto& x : enumerate_by_length(ctx, 6)) {
      for (int i = 0; i < ctx.num_generators(); ++i) {
        EXPECT_EQ(right_descents(ctx, x).contains(i), length(ctx, ctx.mul_simple_right(x, i)) < length(ctx, x));
        EXPECT_EQ(left_descents(ctx, x).contains(i), length(ctx, ctx.mul_simple_left(i, x)) < length(ctx, x));
      }
    }
  }
}

TEST(Group, DescentExamples) {
  const GroupContext a2("A2~");
  EXPECT_EQ(to_string(right_descents(a2, el(a2, "021020"))), "{0,2}");
  EXPECT_EQ(to_string(right_descents(a2, el(a2, "0210201"))), "{1}");
  EXPECT_EQ(to_string(right_descents(a2, el(a2, "e"))), "{}");
  EXPECT_EQ(right_descents(a2, el(a2, "010")), (GeneratorSet{0, 1}));
}

TEST(Group, ParabolicSubgroups) {
  const GroupContext g2("G2~");
  EXPECT_EQ(parabolic_elements(g2, GeneratorSet{1, 2}).size(), 12u);
  EXPECT_EQ(parabolic_elements(g2, GeneratorSet{0, 2}).size(), 6u);
  EXPECT_EQ(parabolic_elements(g2, GeneratorSet{0, 1}).size(), 4u);
  EXPECT_EQ(parabolic_elements(g2, GeneratorSet{}).size(), 1u);
  EXPECT_THROW(parabolic_elements(g2, GeneratorSet{0, 1, 2}), PreconditionError);
}

TEST(Group, FundamentalChamber) {
  const GroupContext a2("A2~");
  int count = 0;
  for (const auto& x : enumerate_by_length(a2, 6)) {
    const bool expected = length(a2, a2.mul_simple_left(1, x)) > length(a2, x) &&
                          length(a2, a2.mul_simple_left(2, x)) > length(a2, x);
    EXPECT_EQ(is_fundamental_chamber(a2, x), expected);
    count += expected;
  }
  EXPECT_GT(count, 0);
  EXPECT_TRUE(is_fundamental_chamber(a2, el(a2, "0120102")));
  EXPECT_THROW(is_fundamental_chamber(GroupContext("A1~"), GroupContext("A1~").identity()), TypeUnsupportedError);
}

TEST(Group, ParseErrors) {
  const GroupContext a2("A2~");
  EXPECT_THROW(parse_word(a2, "013"), InvalidWordError);
  EXPECT_THROW(parse_word(a2, "0a"), InvalidWordError);
  EXPECT_THROW(parse_word(GroupContext("A1~"), "2"), InvalidWordError);
  EXPECT_THROW(GroupContext("D4~"), UnknownTypeError);
}

TEST(Group, CanonicalOrder) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    const auto elems = enumerate_by_length(ctx, 5);
    ElementSet s(elems.begin(), elems.end());
    const auto sorted = sorted_canonically(ctx, s);
    ASSERT_EQ(sorted.size(), elems.size());
    for (std::size_t k = 1; k < sorted.size(); ++k) {
      EXPECT_TRUE(canonical_less(ctx, sorted[k - 1], sorted[k]));
      EXPECT_FALSE(canonical_less(ctx, sorted[k], sorted[k - 1]));
    }
    EXPECT_EQ(sorted.front(), ctx.identity());
  }
}

TEST(Group, ApplyHyperplaneMatchesReflectionConjugation) {
  for (const auto& tag : alcove::testing::plane_types()) {
    const GroupContext ctx(tag);
    for (const auto& x : enumerate_by_length(ctx, 4)) {
      for (const auto& g : ctx.roots().positive_roots()) {
        for (Int k = -2; k <= 2; ++k) {
          const Hyperplane h{g, k};
          const Element conj = ctx.multiply(ctx.multiply(x, ctx.reflection(h)), ctx.inverse(x));
          EXPECT_EQ(ctx.reflection(ctx.apply(x, h)), conj);
        }
      }
    }
  }
}

TEST(Group, PanelWalls) {
  for (const auto& tag : alcove::testing::plane_types()) {
    const GroupContext ctx(tag);
    for (const auto& x : enumerate_by_length(ctx, 5)) {
      for (int i = 0; i < 3; ++i) {
        // Crossing the type-i panel of x is left multiplication by its reflection.
        EXPECT_EQ(ctx.multiply(ctx.reflection(ctx.panel_wall(x, i)), x), ctx.mul_simple_right(x, i));
      }
    }
    for (int i = 0; i < 3; ++i) EXPECT_EQ(ctx.panel_wall(ctx.identity(), i), ctx.base_wall(i));
  }
}
