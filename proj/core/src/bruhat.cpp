#include "alcove/bruhat.hpp"

#include "alcove/annex.hpp"

namespace alcove {

bool leq(const GroupContext& ctx, const Element& x, const Element& y) {
  // The recursion never branches, so it runs as a loop over one chain of
  // (x, y) pairs.
  Element a = x, b = y;
  int la = length(ctx, a), lb = length(ctx, b);
  while (true) {
    if (la > lb) return false;
    if (la == lb) return a == b;
    int s = -1;
    for (int i = 0; i < ctx.num_generators(); ++i) {
      if (length(ctx, ctx.mul_simple_right(b, i)) < lb) {
        s = i;
        break;
      }
    }
    const Element as = ctx.mul_simple_right(a, s);
    const int las = length(ctx, as);
    if (las < la) {
      a = as;
      la = las;
    }
    b = ctx.mul_simple_right(b, s);
    --lb;
  }
}

namespace {

bool search_subwords(const GroupContext& ctx, const Word& word, std::size_t pos,
                     const Element& prefix, const Element& target) {
  if (pos == word.size()) return prefix == target;
  return search_subwords(ctx, word, pos + 1, prefix, target) ||
         search_subwords(ctx, word, pos + 1, ctx.mul_simple_right(prefix, word[pos]), target);
}

}  // namespace

bool leq_oracle_word(const GroupContext& ctx, const Element& x, const Word& y_word, int cap) {
  if (static_cast<int>(y_word.size()) > cap) {
    throw CapExceededError("leq_oracle: word length " + std::to_string(y_word.size()) +
                           " exceeds the oracle cap " + std::to_string(cap));
  }
  return search_subwords(ctx, y_word, 0, ctx.identity(), x);
}

bool leq_oracle(const GroupContext& ctx, const Element& x, const Element& y, int cap) {
  if (length(ctx, y) > cap) {
    throw CapExceededError("leq_oracle: length " + std::to_string(length(ctx, y)) +
                           " exceeds the oracle cap " + std::to_string(cap));
  }
  return leq_oracle_word(ctx, x, reduced_word(ctx, y), cap);
}

ElementSet shadow(const GroupContext& ctx, const Element& w) {
  // Every x <= w is reached from e through its reduced-word prefixes, and
  // each prefix is again <= w.
  ElementSet members{ctx.identity()};
  std::vector<Element> frontier{ctx.identity()};
  while (!frontier.empty()) {
    std::vector<Element> next;
    for (const auto& x : frontier) {
      const int lx = length(ctx, x);
      for (int i = 0; i < ctx.num_generators(); ++i) {
        Element y = ctx.mul_simple_right(x, i);
        if (length(ctx, y) <= lx || members.contains(y)) continue;
        if (leq(ctx, y, w)) {
          members.insert(y);
          next.push_back(y);
        }
      }
    }
    frontier = std::move(next);
  }
  return members;
}

BruhatInterval interval(const GroupContext& ctx, const Element& x, const Element& y) {
  BruhatInterval out{x, y, shadow(ctx, y)};
  const Annex ax = annex(ctx, x);
  std::erase_if(out.members, [&ax](const Element& z) { return ax.members.contains(z); });
  return out;
}

ElementSet interval_by_filter(const GroupContext& ctx, const Element& x, const Element& y) {
  ElementSet out = shadow(ctx, y);
  std::erase_if(out, [&](const Element& z) { return !leq(ctx, x, z); });
  return out;
}

}  // namespace alcove
