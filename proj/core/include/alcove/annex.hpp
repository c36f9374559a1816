#pragma once

// The annex of w: every y with w not <= y in Bruhat order.  It is finite in
// an affine group, downward closed, and its boundary panels carry only types
// in D_R(w).

#include <optional>
#include <vector>

#include "alcove/group.hpp"

namespace alcove {

/// A panel of a member alcove whose other side lies outside the annex.
struct BoundaryPanel {
  Element alcove;
  int type = 0;

  friend bool operator==(const BoundaryPanel&, const BoundaryPanel&) = default;
};

struct Annex {
  Element owner;
  ElementSet members;
  /// Sorted by (canonical order of alcove, type).
  std::vector<BoundaryPanel> boundary;
  int max_member_length = -1;

  bool contains(const Element& y) const { return members.contains(y); }
  /// The distinct alcoves appearing in `boundary`.
  ElementSet boundary_alcoves() const;
};

/// Member length cap used when none is given: 2 l(w) + 2|W0|.  Observed
/// maxima reach 2 l(w) + 1 in A2~.
int default_annex_cap(const GroupContext& ctx, const Element& w);

/// Throws CapExceededError if a member longer than the cap turns up.
Annex annex(const GroupContext& ctx, const Element& w, std::optional<int> max_length = std::nullopt);

/// Every boundary panel type lies in D_R(w), and y.s_j is a member for each
/// member y and each j outside D_R(w).
bool check_boundary_types(const GroupContext& ctx, const Element& w);
bool check_boundary_types(const GroupContext& ctx, const Annex& a);

/// annex(w).W_{I-{k}}.  Requires w != e and k not in D_R(w).
ElementSet annex_product(const GroupContext& ctx, const Element& w, int k);

/// Left W0-stability of annex(w).  Requires w in the fundamental chamber.
bool check_w0_stability(const GroupContext& ctx, const Element& w);

/// For each member x and each wall separating x from the fundamental alcove,
/// the reflected alcove (which is shorter) is again a member.
bool reflection_closure_check(const GroupContext& ctx, const Element& w);

/// The walls separating the fundamental alcove from x's alcove.
std::vector<Hyperplane> separating_walls(const GroupContext& ctx, const Element& x);

}  // namespace alcove
