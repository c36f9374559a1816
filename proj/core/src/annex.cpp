#include "alcove/annex.hpp"

#include <algorithm>

#include "alcove/bruhat.hpp"

namespace alcove {

ElementSet Annex::boundary_alcoves() const {
  ElementSet out;
  for (const auto& p : boundary) out.insert(p.alcove);
  return out;
}

int default_annex_cap(const GroupContext& ctx, const Element& w) {
  return 2 * length(ctx, w) + 2 * ctx.finite_order();
}

Annex annex(const GroupContext& ctx, const Element& w, std::optional<int> max_length) {
  const int cap = max_length.value_or(default_annex_cap(ctx, w));
  Annex a{w, {}, {}, -1};
  if (w == ctx.identity()) return a;

  std::vector<Element> frontier{ctx.identity()};
  a.members.insert(ctx.identity());
  a.max_member_length = 0;
  int level = 0;
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& y : frontier) {
      for (int i = 0; i < ctx.num_generators(); ++i) {
        Element z = ctx.mul_simple_right(y, i);
        if (length(ctx, z) <= level || a.members.contains(z) || leq(ctx, w, z)) continue;
        a.members.insert(z);
        next.push_back(z);
      }
    }
    if (next.empty()) break;
    ++level;
    if (level > cap) {
      throw CapExceededError("annex: member of length " + std::to_string(level) +
                             " exceeds the safety cap " + std::to_string(cap));
    }
    a.max_member_length = level;
    frontier = std::move(next);
  }

  for (const auto& y : sorted_canonically(ctx, a.members)) {
    for (int i = 0; i < ctx.num_generators(); ++i) {
      if (!a.members.contains(ctx.mul_simple_right(y, i))) a.boundary.push_back({y, i});
    }
  }
  return a;
}

bool check_boundary_types(const GroupContext& ctx, const Annex& a) {
  const GeneratorSet d = right_descents(ctx, a.owner);
  for (const auto& p : a.boundary) {
    if (!d.contains(p.type)) return false;
  }
  for (const auto& y : a.members) {
    for (int j = 0; j < ctx.num_generators(); ++j) {
      if (!d.contains(j) && !a.members.contains(ctx.mul_simple_right(y, j))) return false;
    }
  }
  return true;
}

bool check_boundary_types(const GroupContext& ctx, const Element& w) {
  return check_boundary_types(ctx, annex(ctx, w));
}

ElementSet annex_product(const GroupContext& ctx, const Element& w, int k) {
  if (!ctx.valid_generator(k)) throw PreconditionError("annex_product: invalid generator");
  if (w == ctx.identity()) throw PreconditionError("annex_product: w must not be the identity");
  if (right_descents(ctx, w).contains(k)) {
    throw PreconditionError("annex_product: k must not be a right descent of w");
  }
  GeneratorSet rest = ctx.all_generators();
  rest.erase(k);
  const auto parabolic = parabolic_elements(ctx, rest);
  ElementSet out;
  for (const auto& x : annex(ctx, w).members) {
    for (const auto& y : parabolic) out.insert(ctx.multiply(x, y));
  }
  return out;
}

bool check_w0_stability(const GroupContext& ctx, const Element& w) {
  if (!is_fundamental_chamber(ctx, w)) {
    throw PreconditionError("check_w0_stability: w must lie in the fundamental chamber");
  }
  const Annex a = annex(ctx, w);
  for (int v = 0; v < ctx.finite_order(); ++v) {
    const Element ve = ctx.finite_element(v);
    for (const auto& z : a.members) {
      if (!a.members.contains(ctx.multiply(ve, z))) return false;
    }
  }
  return true;
}

std::vector<Hyperplane> separating_walls(const GroupContext& ctx, const Element& x) {
  const RootSystem& rs = ctx.roots();
  const Int scale = ctx.barycenter_scale();
  const Vec2 b = ctx.scaled_barycenter(x);
  const Vec2 b0 = ctx.scaled_barycenter(ctx.identity());
  auto floor_div = [](Int p, Int q) { return p / q - ((p % q != 0) && (p < 0) ? 1 : 0); };
  std::vector<Hyperplane> out;
  for (const auto& gamma : rs.positive_roots()) {
    const Int here = floor_div(rs.pairing(b, gamma), scale);
    const Int base = floor_div(rs.pairing(b0, gamma), scale);
    for (Int k = std::min(here, base) + 1; k <= std::max(here, base); ++k) {
      out.push_back(Hyperplane{gamma, k});
    }
  }
  return out;
}

bool reflection_closure_check(const GroupContext& ctx, const Element& w) {
  const Annex a = annex(ctx, w);
  for (const auto& x : a.members) {
    const int lx = length(ctx, x);
    for (const auto& h : separating_walls(ctx, x)) {
      const Element rx = ctx.multiply(ctx.reflection(h), x);
      if (length(ctx, rx) >= lx) return false;
      if (!a.members.contains(rx)) return false;
    }
  }
  return true;
}

}  // namespace alcove
