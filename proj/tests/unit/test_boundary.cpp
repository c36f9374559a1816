#include <gtest/gtest.h>

#include "alcove/annex.hpp"
#include "alcove/boundary.hpp"
#include "support.hpp"

using namespace alcove;
using alcove::testing::el;
using alcove::testing::wd;

TEST(Boundary, IdentityLiesInTheBaseStrip) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    for (const auto& g : ctx.roots().positive_roots()) {
      EXPECT_EQ(strip_index(ctx, ctx.identity(), g), 0);
      for (Int k = -3; k <= 3; ++k) {
        EXPECT_EQ(halfspace_side(ctx, Hyperplane{g, k}, ctx.identity()), Side::Identity);
        EXPECT_EQ(halfspace_side_geometric(ctx, Hyperplane{g, k}, ctx.identity()), Side::Identity);
      }
    }
  }
}

TEST(Boundary, HalfspaceCriteriaAgree) {
  for (const auto& tag : alcove::testing::plane_types()) {
    const GroupContext ctx(tag);
    for (const auto& x : enumerate_by_length(ctx, 5)) {
      for (const auto& g : ctx.roots().positive_roots()) {
        const Int p = strip_index(ctx, x, g);
        for (Int k = -4; k <= 4; ++k) {
          const Hyperplane h{g, k};
          EXPECT_EQ(halfspace_side(ctx, h, x), halfspace_side_geometric(ctx, h, x)) << tag << " " << wd(ctx, x);
          const bool beyond = k >= 1 ? p >= k : p < k;
          EXPECT_EQ(halfspace_side(ctx, h, x) == Side::Infinity, beyond);
        }
      }
    }
  }
  const GroupContext a2("A2~");
  EXPECT_EQ(halfspace_side(a2, a2.base_wall(0), el(a2, "0")), Side::Infinity);
}

TEST(Boundary, TouchingAndPanels) {
  const GroupContext a2("A2~");
  const Root theta = a2.roots().highest_root();
  const Element e = a2.identity();
  EXPECT_TRUE(touches(a2, e, Hyperplane{theta, 0}));
  EXPECT_TRUE(touches(a2, e, Hyperplane{theta, 1}));
  EXPECT_FALSE(touches(a2, e, Hyperplane{theta, 2}));
  EXPECT_FALSE(touches(a2, e, Hyperplane{theta, -1}));
  EXPECT_FALSE(has_panel_on(a2, e, Hyperplane{theta, 0}));
  for (int i = 0; i < 3; ++i) {
    EXPECT_TRUE(has_panel_on(a2, e, a2.base_wall(i)));
    EXPECT_TRUE(touches(a2, e, a2.base_wall(i)));
  }
}

TEST(Boundary, CosetMinimumIsMinimalRepresentative) {
  for (const auto& tag : alcove::testing::plane_types()) {
    const GroupContext ctx(tag);
    for (const auto& x : enumerate_by_length(ctx, 6)) {
      const Element m = coset_minimum(ctx, x);
      bool in_coset = false;
      for (int v = 0; v < ctx.finite_order(); ++v) {
        const Element u = ctx.finite_element(v);
        in_coset = in_coset || ctx.multiply(m, u) == x;
        EXPECT_EQ(length(ctx, ctx.multiply(m, u)), length(ctx, m) + length(ctx, u));
      }
      EXPECT_TRUE(in_coset);
      EXPECT_FALSE(right_descents(ctx, m).contains(1));
      EXPECT_FALSE(right_descents(ctx, m).contains(2));
    }
  }
}

TEST(Boundary, ThreeParallelReflections) {
  for (const auto& tag : alcove::testing::all_types()) {
    const GroupContext ctx(tag);
    for (const auto& g : ctx.roots().positive_roots()) {
      for (Int m = -3; m <= 3; ++m) {
        EXPECT_EQ(three_parallel_compose(ctx, g, m), reflection_element(ctx, Hyperplane{g, m + 1}));
      }
    }
  }
}

TEST(Boundary, TransportIsTranslation) {
  const GroupContext c2("C2~");
  const auto& pos = c2.roots().positive_roots();
  const Hyperplane moved = transport_hyperplane(c2, Hyperplane{pos[0], 1}, Hyperplane{pos[0], 0}, Hyperplane{pos[0], 0});
  EXPECT_EQ(moved, (Hyperplane{pos[0], 2}));
  EXPECT_THROW(transport_hyperplane(c2, Hyperplane{pos[0], 1}, Hyperplane{pos[1], 0}, Hyperplane{pos[0], 0}),
               PreconditionError);
}

TEST(Boundary, Pm1Hypotheses) {
  const GroupContext a2("A2~");
  const Root theta = a2.roots().highest_root();
  const Element e = a2.identity();
  EXPECT_EQ(check_pm1(a2, theta, 5, e), Outcome::HypothesisUnmet);
  EXPECT_EQ(check_pm1(a2, theta, -1, e), Outcome::HypothesisUnmet);
  int holds = 0;
  for (const auto& x : enumerate_by_length(a2, 4)) {
    for (const auto& g : a2.roots().positive_roots()) {
      const Int p = strip_index(a2, x, g);
      for (Int m = p - 1; m <= p + 2; ++m) {
        const Outcome o = check_pm1(a2, g, m, x);
        EXPECT_NE(o, Outcome::Fails);
        if (m < p || m > p + 1) {
          EXPECT_EQ(o, Outcome::HypothesisUnmet);
        }
        holds += o == Outcome::Holds;
      }
    }
  }
  EXPECT_GT(holds, 0);
}

TEST(Boundary, ReflectionSequences) {
  const GroupContext g2("G2~");
  const Root g = g2.roots().positive_roots()[1];
  const ReflectionSequence seq{g, 2, -1, 3};
  EXPECT_EQ(seq.wall(0), (Hyperplane{g, 3}));
  EXPECT_EQ(seq.wall(3), (Hyperplane{g, 0}));
  const Element x = el(g2, "0120");
  const auto orbit = reflection_orbit(g2, seq, x);
  ASSERT_EQ(orbit.size(), 4u);
  EXPECT_EQ(orbit[0], x);
  for (int t = 1; t <= 3; ++t) EXPECT_EQ(orbit[t], g2.multiply(g2.reflection(seq.wall(t)), orbit[t - 1]));
}

TEST(Boundary, DaggerNeedsTwoWallsAndADescent) {
  const GroupContext a2("A2~");
  const Element w = el(a2, "021020");
  const Root theta = a2.roots().highest_root();
  const Int p = strip_index(a2, w, theta);
  EXPECT_FALSE(dagger_holds(a2, DaggerInstance{ReflectionSequence{theta, p, 1, 1}, w, 0}));
  EXPECT_FALSE(dagger_holds(a2, DaggerInstance{ReflectionSequence{theta, p, 1, 3}, w, 1}));
  EXPECT_FALSE(dagger_holds(a2, DaggerInstance{ReflectionSequence{theta, p + 5, 1, 3}, w, 0}));
}

TEST(Boundary, PredictionsLandOnTheBoundary) {
  for (const auto& tag : alcove::testing::plane_types()) {
    const GroupContext ctx(tag);
    const Element w = el(ctx, "021020");
    const Annex a = annex(ctx, w);
    const ElementSet rim = a.boundary_alcoves();
    for (int i : right_descents(ctx, w).members()) {
      const ElementSet predicted = predicted_boundary(ctx, w, i, 6);
      EXPECT_FALSE(predicted.empty()) << tag;
      for (const auto& y : predicted) EXPECT_TRUE(rim.contains(y)) << tag << " " << wd(ctx, y);
      for (const auto& pr : predictions(ctx, w, i, 6)) {
        const auto ys = reflection_orbit(ctx, pr.seq, ctx.mul_simple_right(w, i));
        EXPECT_EQ(ys.back(), pr.element);
        EXPECT_EQ(length(ctx, pr.element), length(ctx, w) - 1 + pr.seq.count);
      }
    }
    for (int j = 0; j < 3; ++j) {
      if (!right_descents(ctx, w).contains(j)) {
        EXPECT_THROW(predictions(ctx, w, j, 6), PreconditionError);
      }
    }
  }
}
