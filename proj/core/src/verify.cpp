#include "alcove/verify.hpp"

#include <algorithm>

#include "alcove/annex.hpp"
#include "alcove/bruhat.hpp"

namespace alcove {

StatementReport& Report::statement(std::string_view name) {
  for (auto& s : statements_) {
    if (s.name == name) return s;
  }
  statements_.emplace_back().name = name;
  return statements_.back();
}

const StatementReport* Report::find(std::string_view name) const {
  for (const auto& s : statements_) {
    if (s.name == name) return &s;
  }
  return nullptr;
}

void Report::merge(const Report& other) {
  for (const auto& o : other.statements_) {
    StatementReport& s = statement(o.name);
    s.instances += o.instances;
    s.passed += o.passed;
    s.skipped += o.skipped;
    s.failures.insert(s.failures.end(), o.failures.begin(), o.failures.end());
    s.notes.insert(s.notes.end(), o.notes.begin(), o.notes.end());
  }
}

long Report::failure_count() const {
  long n = 0;
  for (const auto& s : statements_) n += static_cast<long>(s.failures.size());
  return n;
}

namespace {

std::string word(const GroupContext& ctx, const Element& x) {
  const std::string s = to_word_string(ctx, x);
  return s.empty() ? "e" : s;
}

std::string describe(const GroupContext& ctx, const DaggerInstance& inst) {
  return "w=" + word(ctx, inst.w) + " i=" + std::to_string(inst.i) + " first=" +
         to_string(inst.seq.wall(1)) + " step=" + (inst.seq.step > 0 ? "+1" : "-1") +
         " n=" + std::to_string(inst.seq.count);
}

GeneratorSet descent_intersection(const GroupContext& ctx, const std::vector<Element>& ys, int from,
                                  int to) {
  GeneratorSet s = ctx.all_generators();
  for (int t = from; t <= to; ++t) s = s & right_descents(ctx, ys[t]);
  return s;
}

// Identity half of H_{g,k} is {< k} for k >= 1 and {> k} for k <= 0.
bool identity_half_contained(Int inner, Int outer) {
  if (inner >= 1 && outer >= 1) return inner <= outer;
  if (inner <= 0 && outer <= 0) return inner >= outer;
  return false;
}

void require_plane(const GroupContext& ctx, const char* what) {
  if (!is_plane_type(ctx.type())) {
    throw TypeUnsupportedError(std::string(what) + ": plane types only");
  }
}

}  // namespace

Report verify_descent_propagation(const GroupContext& ctx, const DaggerInstance& inst) {
  Report r;
  const auto& seq = inst.seq;
  const int n = seq.count;
  const Element wsi = ctx.mul_simple_right(inst.w, inst.i);
  const auto ys = reflection_orbit(ctx, seq, wsi);
  const auto us = reflection_orbit(ctx, seq, inst.w);
  auto key = [&] { return describe(ctx, inst); };

  const bool descent = right_descents(ctx, inst.w).contains(inst.i);
  bool plus_one = n >= 1, increasing = n >= 1, apart = true;
  for (int t = 1; t <= n; ++t) {
    const int d = length(ctx, ys[t]) - length(ctx, ys[t - 1]);
    plus_one = plus_one && d == 1;
    increasing = increasing && d > 0;
    apart = apart && !(ys[t] == us[t - 1]);
  }
  const Int p = strip_index(ctx, inst.w, seq.direction);
  const bool first_bounds_strip = seq.first_level == p || seq.first_level == p + 1;
  const GeneratorSet last = n >= 1 ? right_descents(ctx, ys[n]) : GeneratorSet{};

  r.statement("i-not-descent")
      .record(descent && plus_one && apart, !last.contains(inst.i), key);

  {
    auto& s = r.statement("shared-decreasing");
    bool any = false;
    if (descent && plus_one) {
      for (int j : last.members()) {
        bool never_panel = true;
        for (int t = 1; t <= n; ++t) {
          if (ys[t] == ctx.mul_simple_right(ys[t - 1], j)) never_panel = false;
        }
        if (!never_panel) continue;
        any = true;
        bool all = true;
        for (int t = 1; t <= n; ++t) all = all && right_descents(ctx, ys[t]).contains(j);
        s.record(true, all, [&] { return key() + " j=" + std::to_string(j); });
      }
    }
    if (!any) s.record(Outcome::HypothesisUnmet, key);
  }

  const bool rank2_hyp = descent && plus_one && apart && first_bounds_strip;
  {
    bool last_step_is_panel = false;
    for (int j : last.members()) {
      if (ys[n] == ctx.mul_simple_right(ys[n - 1], j)) last_step_is_panel = true;
    }
    const bool shared = rank2_hyp && !descent_intersection(ctx, ys, 1, n).empty();
    r.statement("nonempty-or").record(rank2_hyp, shared || last_step_is_panel, key);
    r.statement("nonempty-prefix")
        .record(rank2_hyp && n >= 2, n >= 2 && !descent_intersection(ctx, ys, 1, n - 1).empty(), key);
  }

  {
    bool nested = true;
    for (int t = 3; t <= n; ++t) {
      nested = nested && identity_half_contained(seq.wall(t - 1).level, seq.wall(t).level);
    }
    r.statement("halfspace-nesting").record(increasing && n >= 3, nested, key);

    bool inside = true;
    for (int t = 1; t <= n; ++t) {
      inside = inside && halfspace_side(ctx, seq.wall(t), wsi) == Side::Identity;
    }
    r.statement("x-in-identity-halves").record(increasing && n >= 3, inside, key);
  }

  r.statement("w-in-last-identity-half")
      .record(descent && increasing && n >= 3 && !(ys[1] == inst.w),
              n >= 1 && halfspace_side(ctx, seq.wall(n), inst.w) == Side::Identity, key);
  r.statement("prefix-in-last-identity-half")
      .record(descent && increasing && apart,
              n >= 1 && halfspace_side(ctx, seq.wall(n), us[n - 1]) == Side::Identity, key);
  return r;
}

Report structural_checks(const GroupContext& ctx, int max_length) {
  require_plane(ctx, "structural_checks");
  Report r;
  auto& minimal_half = r.statement("minimal-in-halfspace-coset");
  auto& preminimal = r.statement("preminimal-zero-descent");
  auto& adjacent = r.statement("preminimal-adjacent");
  auto& order4 = r.statement("no-order-4");
  auto& touching = r.statement("wall-touching-pm1");
  auto& not_max = r.statement("not-maximal-in-coset");
  const RootSystem& rs = ctx.roots();

  for (const auto& x : enumerate_by_length(ctx, max_length)) {
    const int lx = length(ctx, x);
    const GeneratorSet d = right_descents(ctx, x);
    const Element y = coset_minimum(ctx, x);
    const int ly = length(ctx, y);
    auto key = [&] { return "x=" + word(ctx, x); };

    bool next_to_min = false;
    for (int j = 1; j < ctx.num_generators(); ++j) {
      if (ctx.mul_simple_right(y, j) == x) next_to_min = true;
    }
    const bool is_preminimal = lx == ly + 1;
    adjacent.record(true, next_to_min == is_preminimal, key);

    std::vector<Element> coset;
    for (int v = 0; v < ctx.finite_order(); ++v) coset.push_back(ctx.multiply(x, ctx.finite_element(v)));

    bool in_identity_strip = false;
    for (const auto& gamma : rs.positive_roots()) {
      if (strip_index(ctx, x, gamma) == 0) in_identity_strip = true;

      // Walls through the special vertex.
      const Hyperplane h{gamma, rs.pairing(x.translation, gamma)};
      bool minimal = halfspace_side(ctx, h, x) == Side::Infinity;
      for (const auto& z : coset) {
        if (minimal && halfspace_side(ctx, h, z) == Side::Infinity && length(ctx, z) < lx) minimal = false;
      }
      minimal_half.record(minimal, has_panel_on(ctx, x, h),
                          [&] { return key() + " H=" + to_string(h); });

      const Int p = strip_index(ctx, x, gamma);
      for (int dir : {1, -1}) {
        const Int l0 = dir == 1 ? p : p + 1;
        const Hyperplane h0{gamma, l0}, h1{gamma, l0 + dir}, h2{gamma, l0 + 2 * dir};
        const Element r0x = ctx.multiply(ctx.reflection(h0), x);
        const Element r1x = ctx.multiply(ctx.reflection(h1), x);
        const Element r2r1x = ctx.multiply(ctx.reflection(h2), r1x);
        const bool pm1_hyp = length(ctx, r1x) == lx + 1 && length(ctx, r2r1x) == lx + 2;
        const bool r0_shortens = length(ctx, r0x) < lx;
        const bool meets_h0 = touches(ctx, x, h0);
        auto wkey = [&] { return key() + " r0=" + to_string(h0) + " r1=" + to_string(h1); };

        preminimal.record(r0_shortens && !meets_h0 && is_preminimal && has_panel_on(ctx, y, h1),
                          d.contains(0), wkey);
        touching.record(pm1_hyp && meets_h0 && r0_shortens, length(ctx, r0x) == lx - 1, wkey);
      }
    }

    not_max.record(in_identity_strip, !(d.contains(1) && d.contains(2)), key);
    if (in_identity_strip && d.size() == 2 && d.contains(0)) {
      const int i = d.contains(1) ? 1 : 2;
      order4.record(true, ctx.coxeter_entry(0, i) != 4, key);
    } else {
      order4.record(Outcome::HypothesisUnmet, key);
    }
  }
  return r;
}

Report sweep_pm1(const GroupContext& ctx, int max_length) {
  Report r;
  auto& s = r.statement("pm1");
  for (const auto& x : enumerate_by_length(ctx, max_length)) {
    for (const auto& gamma : ctx.roots().positive_roots()) {
      const Int p = strip_index(ctx, x, gamma);
      for (Int m : {p, p + 1}) {
        s.record(check_pm1(ctx, gamma, m, x), [&] {
          return "x=" + word(ctx, x) + " r0=" + to_string(Hyperplane{gamma, m});
        });
      }
    }
  }
  return r;
}

Report sweep_dagger(const GroupContext& ctx, int max_length, int max_n) {
  Report r;
  auto& member = r.statement("dagger-in-annex");
  auto& boundary = r.statement("dagger-on-boundary");
  for (const auto& w : enumerate_by_length(ctx, max_length)) {
    const GeneratorSet d = right_descents(ctx, w);
    if (d.empty()) continue;
    const Annex a = annex(ctx, w);
    const ElementSet edge = a.boundary_alcoves();
    for (int i : d.members()) {
      for (const auto& gamma : ctx.roots().positive_roots()) {
        const Int p = strip_index(ctx, w, gamma);
        for (Int first : {p, p + 1}) {
          for (int step : {1, -1}) {
            for (int n = 2; n <= max_n; ++n) {
              const DaggerInstance inst{ReflectionSequence{gamma, first, step, n}, w, i};
              const bool holds = dagger_holds(ctx, inst);
              const Element y = holds ? reflection_orbit(ctx, inst.seq, ctx.mul_simple_right(w, i)).back()
                                      : Element{};
              auto key = [&] { return describe(ctx, inst) + " y=" + word(ctx, y); };
              member.record(holds, holds && a.contains(y), key);
              boundary.record(holds, holds && edge.contains(y), key);
            }
          }
        }
      }
    }
  }
  return r;
}

Report sweep_main_theorem(const GroupContext& ctx, int max_length, int max_n) {
  Report r;
  auto& member = r.statement("main-theorem");
  auto& boundary = r.statement("boundary-corollary");
  for (const auto& w : enumerate_by_length(ctx, max_length)) {
    const GeneratorSet d = right_descents(ctx, w);
    if (d.empty()) continue;
    const Annex a = annex(ctx, w);
    const ElementSet edge = a.boundary_alcoves();
    for (int i : d.members()) {
      for (const auto& pr : predictions(ctx, w, i, max_n)) {
        auto key = [&] {
          return describe(ctx, DaggerInstance{pr.seq, w, i}) + " y=" + word(ctx, pr.element);
        };
        member.record(true, a.contains(pr.element), key);
        boundary.record(true, edge.contains(pr.element), key);
      }
    }
  }
  return r;
}

Report sweep_descent(const GroupContext& ctx, int max_length, int max_n) {
  Report r;
  for (const auto& w : enumerate_by_length(ctx, max_length)) {
    for (int i : right_descents(ctx, w).members()) {
      for (const auto& gamma : ctx.roots().positive_roots()) {
        const Int p = strip_index(ctx, w, gamma);
        for (Int first = p - 2; first <= p + 3; ++first) {
          for (int step : {1, -1}) {
            for (int n = 1; n <= max_n; ++n) {
              r.merge(verify_descent_propagation(
                  ctx, DaggerInstance{ReflectionSequence{gamma, first, step, n}, w, i}));
            }
          }
        }
      }
    }
  }
  return r;
}

Report sweep_annex(const GroupContext& ctx, int max_length) {
  Report r;
  auto& finite = r.statement("annex-finite");
  auto& oracle = r.statement("annex-oracle");
  for (const auto& w : enumerate_by_length(ctx, max_length)) {
    Annex a;
    try {
      a = annex(ctx, w);
    } catch (const CapExceededError& e) {
      finite.record(true, false, [&] { return "w=" + word(ctx, w) + ": " + e.what(); });
      continue;
    }
    finite.record(true, true, [] { return std::string(); });
    ElementSet touched = a.members;
    for (const auto& y : a.members) {
      for (int i = 0; i < ctx.num_generators(); ++i) touched.insert(ctx.mul_simple_right(y, i));
    }
    if (touched.empty()) touched.insert(ctx.identity());
    for (const auto& y : sorted_canonically(ctx, touched)) {
      const bool outside_preshadow = !leq_oracle(ctx, w, y, std::max(kOracleCap, length(ctx, y)));
      oracle.record(true, outside_preshadow == a.contains(y),
                    [&] { return "w=" + word(ctx, w) + " y=" + word(ctx, y); });
    }
  }
  return r;
}

Report sweep_boundary_types(const GroupContext& ctx, int max_length) {
  Report r;
  auto& s = r.statement("boundary-types");
  for (const auto& w : enumerate_by_length(ctx, max_length)) {
    s.record(true, check_boundary_types(ctx, w), [&] { return "w=" + word(ctx, w); });
  }
  return r;
}

Report sweep_product(const GroupContext& ctx, int max_length) {
  Report r;
  auto& inclusion = r.statement("product-inclusion");
  auto& equality = r.statement("product-equality");
  long strict = 0;
  for (const auto& w : enumerate_by_length(ctx, max_length)) {
    if (w == ctx.identity()) continue;
    const GeneratorSet d = right_descents(ctx, w);
    for (int k = 0; k < ctx.num_generators(); ++k) {
      if (d.contains(k)) continue;
      const Element wk = ctx.mul_simple_right(w, k);
      const ElementSet product = annex_product(ctx, w, k);
      const ElementSet bigger = annex(ctx, wk).members;
      const bool included =
          std::all_of(bigger.begin(), bigger.end(), [&](const Element& y) { return product.contains(y); });
      auto key = [&] { return "w=" + word(ctx, w) + " k=" + std::to_string(k); };
      inclusion.record(true, included, key);
      const bool single = right_descents(ctx, wk) == GeneratorSet{k};
      equality.record(single, bigger == product, key);
      if (!single && bigger != product) {
        if (strict < 3) {
          inclusion.notes.push_back("strict: " + key() + " |annex(ws_k)|=" + std::to_string(bigger.size()) +
                                    " |annex(w).W|=" + std::to_string(product.size()));
        }
        ++strict;
      }
    }
  }
  inclusion.notes.push_back("strict inclusions: " + std::to_string(strict));
  return r;
}

Report sweep_symmetry(const GroupContext& ctx, int max_length) {
  require_plane(ctx, "sweep_symmetry");
  Report r;
  auto& s = r.statement("w0-stability");
  for (const auto& w : enumerate_by_length(ctx, max_length)) {
    const bool chamber = is_fundamental_chamber(ctx, w);
    s.record(chamber, chamber && check_w0_stability(ctx, w), [&] { return "w=" + word(ctx, w); });
  }
  return r;
}

Report sweep_closure(const GroupContext& ctx, int max_length) {
  Report r;
  auto& s = r.statement("reflection-closure");
  for (const auto& w : enumerate_by_length(ctx, max_length)) {
    s.record(true, reflection_closure_check(ctx, w), [&] { return "w=" + word(ctx, w); });
  }
  return r;
}

Report sweep_three_parallel(const GroupContext& ctx, Int min_level, Int max_level) {
  Report r;
  auto& three = r.statement("three-parallel");
  auto& transport = r.statement("transport-shift");
  const RootSystem& rs = ctx.roots();
  for (const auto& gamma : rs.positive_roots()) {
    for (Int m = min_level; m <= max_level; ++m) {
      three.record(true, three_parallel_compose(ctx, gamma, m) == ctx.reflection(Hyperplane{gamma, m + 1}),
                   [&] { return "gamma=" + to_string(gamma) + " m=" + std::to_string(m); });
    }
    for (Int n1 = min_level; n1 <= max_level; ++n1) {
      for (Int n2 = min_level; n2 <= max_level; ++n2) {
        for (const auto& alpha : rs.positive_roots()) {
          for (Int m = min_level; m <= max_level; ++m) {
            const Hyperplane moved =
                transport_hyperplane(ctx, Hyperplane{gamma, n2}, Hyperplane{gamma, n1}, Hyperplane{alpha, m});
            const Hyperplane expected{alpha, m + (n2 - n1) * rs.coroot_pairing(gamma, alpha)};
            transport.record(true, moved == expected, [&] {
              return "gamma=" + to_string(gamma) + " n1=" + std::to_string(n1) + " n2=" + std::to_string(n2) +
                     " H3=" + to_string(Hyperplane{alpha, m});
            });
          }
        }
      }
    }
  }
  return r;
}

Report sweep_halfspace(const GroupContext& ctx, int max_length, Int max_level) {
  Report r;
  auto& agree = r.statement("halfspace-criteria-agree");
  auto& flip = r.statement("halfspace-flip");
  for (const auto& x : enumerate_by_length(ctx, max_length)) {
    for (const auto& gamma : ctx.roots().positive_roots()) {
      for (Int k = -max_level; k <= max_level; ++k) {
        const Hyperplane h{gamma, k};
        const Side side = halfspace_side(ctx, h, x);
        auto key = [&] { return "x=" + word(ctx, x) + " H=" + to_string(h); };
        agree.record(true, side == halfspace_side_geometric(ctx, h, x), key);
        flip.record(true, side != halfspace_side(ctx, h, ctx.multiply(ctx.reflection(h), x)), key);
      }
    }
  }
  return r;
}

const std::vector<std::string>& verification_names() {
  static const std::vector<std::string> names{"pm1",     "dagger",   "main",           "descent",
                                              "structural", "annex", "boundary-types", "product",
                                              "symmetry", "closure", "three-parallel", "halfspace"};
  return names;
}

Report run_verification(const GroupContext& ctx, std::string_view name, int max_length, int max_n) {
  if (name == "pm1") return sweep_pm1(ctx, max_length);
  if (name == "dagger") return sweep_dagger(ctx, max_length, max_n);
  if (name == "main") return sweep_main_theorem(ctx, max_length, max_n);
  if (name == "descent") return sweep_descent(ctx, max_length, max_n);
  if (name == "structural") return structural_checks(ctx, max_length);
  if (name == "annex") return sweep_annex(ctx, max_length);
  if (name == "boundary-types") return sweep_boundary_types(ctx, max_length);
  if (name == "product") return sweep_product(ctx, max_length);
  if (name == "symmetry") return sweep_symmetry(ctx, max_length);
  if (name == "closure") return sweep_closure(ctx, max_length);
  if (name == "three-parallel") return sweep_three_parallel(ctx, -3, 3);
  if (name == "halfspace") return sweep_halfspace(ctx, max_length, 4);
  throw PreconditionError("unknown verification '" + std::string(name) + "'");
}

}  // namespace alcove
