#include "alcove/boundary.hpp"

namespace alcove {

namespace {

Int floor_div(Int p, Int q) {
  Int d = p / q;
  if ((p % q != 0) && (p < 0)) --d;
  return d;
}

int sign(Int v) { return (v > 0) - (v < 0); }

}  // namespace

Side halfspace_side(const GroupContext& ctx, const Hyperplane& h, const Element& x) {
  return length(ctx, ctx.multiply(ctx.reflection(h), x)) > length(ctx, x) ? Side::Identity
                                                                           : Side::Infinity;
}

Side halfspace_side_geometric(const GroupContext& ctx, const Hyperplane& h, const Element& x) {
  const RootSystem& rs = ctx.roots();
  const Int scaled_level = h.level * ctx.barycenter_scale();
  const Int here = rs.pairing(ctx.scaled_barycenter(x), h.direction) - scaled_level;
  const Int base = rs.pairing(ctx.scaled_barycenter(ctx.identity()), h.direction) - scaled_level;
  return sign(here) == sign(base) ? Side::Identity : Side::Infinity;
}

Int strip_index(const GroupContext& ctx, const Element& x, const Root& gamma) {
  return floor_div(ctx.roots().pairing(ctx.scaled_barycenter(x), gamma), ctx.barycenter_scale());
}

bool touches(const GroupContext& ctx, const Element& x, const Hyperplane& h) {
  for (const auto& v : ctx.alcove_vertices(x)) {
    if (ctx.roots().pairing(v, h.direction) == Rational(h.level)) return true;
  }
  return false;
}

bool has_panel_on(const GroupContext& ctx, const Element& x, const Hyperplane& h) {
  for (int j = 0; j < ctx.num_generators(); ++j) {
    if (ctx.panel_wall(x, j) == h) return true;
  }
  return false;
}

Element coset_minimum(const GroupContext& ctx, const Element& x) {
  Element best = x;
  int best_len = length(ctx, x);
  for (int v = 1; v < ctx.finite_order(); ++v) {
    const Element y = ctx.multiply(x, ctx.finite_element(v));
    const int ly = length(ctx, y);
    if (ly < best_len) {
      best = y;
      best_len = ly;
    }
  }
  return best;
}

Element reflection_element(const GroupContext& ctx, const Hyperplane& h) { return ctx.reflection(h); }

Element three_parallel_compose(const GroupContext& ctx, const Root& gamma, Int m) {
  const Element r1 = ctx.reflection(Hyperplane{gamma, m});
  const Element r2 = ctx.reflection(Hyperplane{gamma, m + 1});
  const Element r3 = ctx.reflection(Hyperplane{gamma, m + 2});
  return ctx.multiply(r3, ctx.multiply(r2, r1));
}

Hyperplane transport_hyperplane(const GroupContext& ctx, const Hyperplane& r2, const Hyperplane& r1,
                                const Hyperplane& h3) {
  if (!(r1.direction == r2.direction)) {
    throw PreconditionError("transport_hyperplane: " + to_string(r1) + " and " + to_string(r2) +
                            " are not parallel");
  }
  const Element t = ctx.multiply(ctx.reflection(r2), ctx.reflection(r1));
  return ctx.apply(t, h3);
}

Outcome check_pm1(const GroupContext& ctx, const Root& gamma, Int m, const Element& x) {
  const Int p = strip_index(ctx, x, gamma);
  int d;
  if (m == p) {
    d = 1;
  } else if (m == p + 1) {
    d = -1;
  } else {
    return Outcome::HypothesisUnmet;
  }
  const Element r0 = ctx.reflection(Hyperplane{gamma, m});
  const Element r1 = ctx.reflection(Hyperplane{gamma, m + d});
  const Element r2 = ctx.reflection(Hyperplane{gamma, m + 2 * d});
  const int lx = length(ctx, x);
  const Element r1x = ctx.multiply(r1, x);
  if (length(ctx, r1x) != lx + 1 || length(ctx, ctx.multiply(r2, r1x)) != lx + 2) {
    return Outcome::HypothesisUnmet;
  }
  const int diff = length(ctx, ctx.multiply(r0, x)) - lx;
  return diff == 1 || diff == -1 ? Outcome::Holds : Outcome::Fails;
}

std::vector<Element> reflection_orbit(const GroupContext& ctx, const ReflectionSequence& seq,
                                      const Element& x) {
  std::vector<Element> out{x};
  out.reserve(seq.count + 1);
  for (int t = 1; t <= seq.count; ++t) {
    out.push_back(ctx.multiply(ctx.reflection(seq.wall(t)), out.back()));
  }
  return out;
}

bool dagger_holds(const GroupContext& ctx, const DaggerInstance& inst) {
  const auto& seq = inst.seq;
  if (seq.count < 2 || (seq.step != 1 && seq.step != -1)) return false;
  if (!ctx.roots().is_positive_root(seq.direction)) return false;
  const Int l0 = seq.wall(0).level, l1 = seq.wall(1).level;
  if (strip_index(ctx, inst.w, seq.direction) != std::min(l0, l1)) return false;
  if (!ctx.valid_generator(inst.i) || !right_descents(ctx, inst.w).contains(inst.i)) return false;
  const auto ys = reflection_orbit(ctx, seq, ctx.mul_simple_right(inst.w, inst.i));
  const auto us = reflection_orbit(ctx, seq, inst.w);
  for (int t = 1; t <= seq.count; ++t) {
    if (length(ctx, ys[t]) != length(ctx, ys[t - 1]) + 1) return false;
    if (ys[t] == us[t - 1]) return false;
  }
  return true;
}

std::vector<Prediction> predictions(const GroupContext& ctx, const Element& w, int i, int max_n) {
  if (!ctx.valid_generator(i) || !right_descents(ctx, w).contains(i)) {
    throw PreconditionError("predicted_boundary: generator " + std::to_string(i) +
                            " is not a right descent of " + to_word_string(ctx, w));
  }
  std::vector<Prediction> out;
  const Element wsi = ctx.mul_simple_right(w, i);
  for (const auto& gamma : ctx.roots().positive_roots()) {
    const Int p = strip_index(ctx, w, gamma);
    for (Int first : {p, p + 1}) {
      for (int step : {1, -1}) {
        Element y = wsi, u = w;
        int ly = length(ctx, y);
        for (int t = 1; t <= max_n; ++t) {
          const Element r = ctx.reflection(Hyperplane{gamma, first + (t - 1) * step});
          const Element next = ctx.multiply(r, y);
          const int lnext = length(ctx, next);
          if (lnext != ly + 1 || next == u) break;
          // A single wall is the same sequence in either direction.
          if (step == 1 || t > 1) out.push_back(Prediction{ReflectionSequence{gamma, first, step, t}, next});
          y = next;
          ly = lnext;
          u = ctx.multiply(r, u);
        }
      }
    }
  }
  return out;
}

ElementSet predicted_boundary(const GroupContext& ctx, const Element& w, int i, int max_n) {
  ElementSet out;
  for (const auto& p : predictions(ctx, w, i, max_n)) out.insert(p.element);
  return out;
}

}  // namespace alcove
