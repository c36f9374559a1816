#pragma once

#include "alcove/group.hpp"

namespace alcove {

/// Default length cap for the brute-force subword oracle.
inline constexpr int kOracleCap = 14;

/// x <= y in Bruhat order, by the lifting recursion: peel the smallest right
/// descent s of y, dropping it from x as well when it is a descent of x.
bool leq(const GroupContext& ctx, const Element& x, const Element& y);

/// x <= y by enumerating all 2^l(y) subwords of one reduced word of y.
/// Throws CapExceededError when l(y) > cap.
bool leq_oracle(const GroupContext& ctx, const Element& x, const Element& y, int cap = kOracleCap);

/// Same as leq_oracle over an explicitly supplied reduced word of y.
bool leq_oracle_word(const GroupContext& ctx, const Element& x, const Word& y_word,
                     int cap = kOracleCap);

/// Lower interval [e, w].
ElementSet shadow(const GroupContext& ctx, const Element& w);

struct BruhatInterval {
  Element low;
  Element high;
  ElementSet members;
};

/// [x, y] computed as shadow(y) minus annex(x).
BruhatInterval interval(const GroupContext& ctx, const Element& x, const Element& y);

/// [x, y] computed as shadow(y) filtered by leq(x, .).
ElementSet interval_by_filter(const GroupContext& ctx, const Element& x, const Element& y);

}  // namespace alcove
