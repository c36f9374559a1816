#pragma once

#include <string>
#include <vector>

#include "alcove/group.hpp"

namespace alcove::testing {

inline const std::vector<std::string>& plane_types() {
  static const std::vector<std::string> tags{"A2~", "C2~", "G2~"};
  return tags;
}

inline const std::vector<std::string>& all_types() {
  static const std::vector<std::string> tags{"A2~", "C2~", "G2~", "A1~"};
  return tags;
}

inline Element el(const GroupContext& ctx, const std::string& word) {
  return from_word(ctx, parse_word(ctx, word));
}

inline std::string wd(const GroupContext& ctx, const Element& x) { return to_word_string(ctx, x); }

// Group elements of every subword of `word`, computed by brute force.
inline ElementSet subword_products(const GroupContext& ctx, const Word& word) {
  ElementSet out;
  const std::size_t n = word.size();
  for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
    Element x = ctx.identity();
    for (std::size_t k = 0; k < n; ++k) {
      if ((mask >> k) & 1u) x = ctx.mul_simple_right(x, word[k]);
    }
    out.insert(x);
  }
  return out;
}

}  // namespace alcove::testing
