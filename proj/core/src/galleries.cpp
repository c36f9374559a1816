#include "alcove/galleries.hpp"

namespace alcove {

Word Gallery::type_word() const {
  Word w;
  w.reserve(steps.size());
  for (const auto& s : steps) w.push_back(s.type);
  return w;
}

std::vector<int> Gallery::fold_set() const {
  std::vector<int> out;
  for (std::size_t t = 0; t < steps.size(); ++t) {
    if (steps[t].folded) out.push_back(static_cast<int>(t) + 1);
  }
  return out;
}

bool Gallery::unfolded() const {
  for (const auto& s : steps) {
    if (s.folded) return false;
  }
  return true;
}

Gallery gallery_from_word(const Element& start, const Word& word) {
  Gallery g{start, {}};
  g.steps.reserve(word.size());
  for (int j : word) g.steps.push_back(GalleryStep{j, false});
  return g;
}

Gallery multifold(const Gallery& g, const std::vector<int>& positions) {
  Gallery out = g;
  for (int p : positions) {
    if (p < 1 || p > static_cast<int>(g.size())) {
      throw PreconditionError("multifold: position " + std::to_string(p) + " outside 1.." +
                              std::to_string(g.size()));
    }
    out.steps[p - 1].folded = !out.steps[p - 1].folded;
  }
  return out;
}

std::vector<Element> alcove_sequence(const GroupContext& ctx, const Gallery& g) {
  std::vector<Element> out{g.start};
  out.reserve(g.size() + 1);
  for (const auto& s : g.steps) {
    out.push_back(s.folded ? out.back() : ctx.mul_simple_right(out.back(), s.type));
  }
  return out;
}

Element end_alcove(const GroupContext& ctx, const Gallery& g) {
  Element c = g.start;
  for (const auto& s : g.steps) {
    if (!s.folded) c = ctx.mul_simple_right(c, s.type);
  }
  return c;
}

Gallery footprint(const Gallery& g) {
  Gallery out{g.start, {}};
  for (const auto& s : g.steps) {
    if (!s.folded) out.steps.push_back(s);
  }
  return out;
}

Gallery left_translate(const GroupContext& ctx, const Element& x, const Gallery& g) {
  return Gallery{ctx.multiply(x, g.start), g.steps};
}

std::vector<Hyperplane> panel_walls(const GroupContext& ctx, const Gallery& g) {
  std::vector<Hyperplane> out;
  out.reserve(g.size());
  const auto seq = alcove_sequence(ctx, g);
  for (std::size_t t = 0; t < g.size(); ++t) out.push_back(ctx.panel_wall(seq[t], g.steps[t].type));
  return out;
}

int crossing_count(const GroupContext& ctx, const Gallery& g, const Hyperplane& h) {
  if (!g.unfolded()) throw PreconditionError("crossing_count: gallery has folded steps");
  int n = 0;
  for (const auto& wall : panel_walls(ctx, g)) {
    if (wall == h) ++n;
  }
  return n;
}

ElementSet shadow_via_foldings_word(const GroupContext& ctx, const Word& reduced, int cap) {
  const int n = static_cast<int>(reduced.size());
  if (n > cap) {
    throw CapExceededError("shadow_via_foldings: " + std::to_string(n) +
                           " steps exceed the cap " + std::to_string(cap));
  }
  const Gallery base = gallery_from_word(ctx.identity(), reduced);
  ElementSet out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> positions;
    for (int t = 0; t < n; ++t) {
      if ((mask >> t) & 1u) positions.push_back(t + 1);
    }
    out.insert(end_alcove(ctx, multifold(base, positions)));
  }
  return out;
}

ElementSet shadow_via_foldings(const GroupContext& ctx, const Element& w, int cap) {
  return shadow_via_foldings_word(ctx, reduced_word(ctx, w), cap);
}

std::string format_gallery(const Gallery& g) {
  std::string s;
  for (const auto& step : g.steps) {
    s += static_cast<char>('0' + step.type);
    if (step.folded) s += '~';
  }
  return s;
}

Gallery parse_gallery(const GroupContext& ctx, std::string_view text, const Element& start) {
  Gallery g{start, {}};
  for (char c : text) {
    if (c == '~') {
      if (g.steps.empty() || g.steps.back().folded) {
        throw InvalidWordError("malformed gallery '" + std::string(text) +
                               "': '~' must follow a step digit");
      }
      g.steps.back().folded = true;
      continue;
    }
    if (c < '0' || c > '9' || !ctx.valid_generator(c - '0')) {
      throw InvalidWordError("malformed gallery '" + std::string(text) + "': letters must be digits 0-" +
                             std::to_string(ctx.num_generators() - 1) + " or '~'");
    }
    g.steps.push_back(GalleryStep{c - '0', false});
  }
  return g;
}

}  // namespace alcove
