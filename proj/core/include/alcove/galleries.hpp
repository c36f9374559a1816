#pragma once

// Galleries of alcoves.  A gallery has a start alcove and a sequence of typed
// steps; an unfolded step of type j moves from c to c.s_j, a folded step
// stays at c (the gallery bounces off the type-j panel of c).

#include <string>
#include <string_view>
#include <vector>

#include "alcove/group.hpp"

namespace alcove {

struct GalleryStep {
  int type = 0;
  bool folded = false;

  friend bool operator==(const GalleryStep&, const GalleryStep&) = default;
};

struct Gallery {
  Element start;
  std::vector<GalleryStep> steps;

  std::size_t size() const { return steps.size(); }
  Word type_word() const;
  /// 1-based positions of the folded steps.
  std::vector<int> fold_set() const;
  bool unfolded() const;

  friend bool operator==(const Gallery&, const Gallery&) = default;
};

/// The unfolded gallery of type `word` starting at `start`.
Gallery gallery_from_word(const Element& start, const Word& word);

/// Toggles the folds at the given 1-based positions.  Throws PreconditionError
/// for positions outside 1..size.
Gallery multifold(const Gallery& g, const std::vector<int>& positions);

/// c_0, ..., c_n.
std::vector<Element> alcove_sequence(const GroupContext& ctx, const Gallery& g);
Element end_alcove(const GroupContext& ctx, const Gallery& g);

/// The unfolded gallery through the same distinct steps: folded steps removed.
Gallery footprint(const Gallery& g);

/// x.g: every alcove of the gallery moved by x on the left.
Gallery left_translate(const GroupContext& ctx, const Element& x, const Gallery& g);

/// The wall of the panel crossed (or bounced off) at each 1-based step.
std::vector<Hyperplane> panel_walls(const GroupContext& ctx, const Gallery& g);

/// Number of steps of an unfolded gallery that cross h.  Throws
/// PreconditionError for a folded gallery.
int crossing_count(const GroupContext& ctx, const Gallery& g, const Hyperplane& h);

/// End alcoves of every multifolding of the unfolded gallery from e of the
/// given reduced word.  Throws CapExceededError past `cap` steps.
ElementSet shadow_via_foldings_word(const GroupContext& ctx, const Word& reduced, int cap = 12);
/// Same, using the canonical reduced word of w.
ElementSet shadow_via_foldings(const GroupContext& ctx, const Element& w, int cap = 12);

/// "01~20": each step's type digit, folded steps followed by '~'.
std::string format_gallery(const Gallery& g);
/// Inverse of format_gallery.  Throws InvalidWordError.
Gallery parse_gallery(const GroupContext& ctx, std::string_view text, const Element& start);

}  // namespace alcove
