#pragma once

// Walls, halfspaces and sequences of adjacent parallel reflections.

#include <vector>

#include "alcove/group.hpp"

namespace alcove {

enum class Side { Identity, Infinity };

/// Identity side iff l(r_H x) > l(x).
Side halfspace_side(const GroupContext& ctx, const Hyperplane& h, const Element& x);
/// The same decided by comparing barycenters of x and e against h.
Side halfspace_side_geometric(const GroupContext& ctx, const Hyperplane& h, const Element& x);

/// floor(<barycenter(x), gamma>): x lies strictly between H_{gamma,k} and
/// H_{gamma,k+1} for k = strip_index.
Int strip_index(const GroupContext& ctx, const Element& x, const Root& gamma);

/// Some vertex of x lies on h.
bool touches(const GroupContext& ctx, const Element& x, const Hyperplane& h);
/// Some panel of x lies in h.
bool has_panel_on(const GroupContext& ctx, const Element& x, const Hyperplane& h);

/// The element of x.W0 of minimal length.
Element coset_minimum(const GroupContext& ctx, const Element& x);

Element reflection_element(const GroupContext& ctx, const Hyperplane& h);

/// r3 r2 r1 for the walls H_{gamma,m}, H_{gamma,m+1}, H_{gamma,m+2}.
Element three_parallel_compose(const GroupContext& ctx, const Root& gamma, Int m);

/// (r2 r1)(h3).  Throws PreconditionError unless r1 and r2 are parallel.
Hyperplane transport_hyperplane(const GroupContext& ctx, const Hyperplane& r2, const Hyperplane& r1,
                                const Hyperplane& h3);

/// Result of checking one instance of a statement with hypotheses.
enum class Outcome { Holds, Fails, HypothesisUnmet };

/// r0 = H_{gamma,m}; r1, r2 are the next two parallel walls on the far side
/// of x.  Hypotheses: x lies between H_{r0} and H_{r1}, and
/// l(r2 r1 x) = l(r1 x) + 1 = l(x) + 2.  Conclusion: l(r0 x) = l(x) +- 1.
Outcome check_pm1(const GroupContext& ctx, const Root& gamma, Int m, const Element& x);

/// Walls H_{gamma, first + (t-1) step} for t = 1..count; step is +1 or -1.
struct ReflectionSequence {
  Root direction;
  Int first_level = 0;
  int step = 1;
  int count = 0;

  /// Wall t, for t = 0..count; wall 0 is the neighbour before the first.
  Hyperplane wall(int t) const { return Hyperplane{direction, first_level + (t - 1) * step}; }
};

/// [x, r1 x, r2 r1 x, ..., rn...r1 x].
std::vector<Element> reflection_orbit(const GroupContext& ctx, const ReflectionSequence& seq,
                                      const Element& x);

struct DaggerInstance {
  ReflectionSequence seq;
  Element w;
  int i = 0;
};

/// n >= 2; w between H_{r0} and H_{r1}; i in D_R(w); each r_t raises the
/// length of r_{t-1}...r1 w s_i by exactly one without landing on
/// r_{t-1}...r1 w.
bool dagger_holds(const GroupContext& ctx, const DaggerInstance& inst);

struct Prediction {
  ReflectionSequence seq;
  Element element;
};

/// Every sequence of 1..max_n adjacent parallel reflections whose first wall
/// bounds w's strip and which keeps raising the length of w s_i by one
/// without landing on the matching r_{t-1}...r1 w, with the element
/// rn...r1 w s_i it produces.  Requires i in D_R(w).
std::vector<Prediction> predictions(const GroupContext& ctx, const Element& w, int i, int max_n);
ElementSet predicted_boundary(const GroupContext& ctx, const Element& w, int i, int max_n);

}  // namespace alcove
