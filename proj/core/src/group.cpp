#include "alcove/group.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>

namespace alcove {

namespace {

Mat2 identity_matrix() { return Mat2{{{1, 0}, {0, 1}}}; }

Mat2 mat_mul(const Mat2& a, const Mat2& b) {
  Mat2 c{};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  }
  return c;
}

Vec2 mat_vec(const Mat2& a, const Vec2& v) {
  return Vec2{a[0][0] * v[0] + a[0][1] * v[1], a[1][0] * v[0] + a[1][1] * v[1]};
}

// floor(p / q) for q > 0.
Int floor_div(Int p, Int q) {
  Int d = p / q;
  if ((p % q != 0) && (p < 0)) --d;
  return d;
}

// Coroot-coordinate matrix of the linear reflection s_gamma:
// x -> x - <x, gamma> gamma^vee.
Mat2 linear_reflection(const RootSystem& rs, const Root& gamma) {
  const Vec2 cv = rs.coroot(gamma);
  Mat2 m = identity_matrix();
  for (int k = 0; k < 2; ++k) {
    // <e_k, gamma> where e_k is the k-th simple coroot.
    Vec2 e{};
    e[k] = 1;
    const Int pk = rs.pairing(e, gamma);
    for (int i = 0; i < 2; ++i) m[i][k] -= cv[i] * pk;
  }
  return m;
}

// Root-coordinate matrix of s_gamma: delta -> delta - <gamma^vee, delta> gamma.
Mat2 root_reflection(const RootSystem& rs, const Root& gamma) {
  Mat2 m = identity_matrix();
  for (int j = 0; j < 2; ++j) {
    Root e;
    e.coords[j] = 1;
    const Int c = rs.coroot_pairing(gamma, e);
    for (int i = 0; i < 2; ++i) m[i][j] -= c * gamma.coords[i];
  }
  return m;
}

}  // namespace

std::vector<int> GeneratorSet::members() const {
  std::vector<int> out;
  for (int g = 0; g < 8; ++g) {
    if (contains(g)) out.push_back(g);
  }
  return out;
}

std::string to_string(GeneratorSet s) {
  std::string out = "{";
  bool first = true;
  for (int g : s.members()) {
    if (!first) out += ',';
    out += std::to_string(g);
    first = false;
  }
  return out + "}";
}

GroupContext::GroupContext(std::string_view tag) : GroupContext(parse_type(tag)) {}

GroupContext::GroupContext(AffineType type) : roots_(type) {
  const int rank = roots_.rank();

  // W0 as pairs of (coroot action, root action), closed under the simple
  // reflections.
  std::vector<Mat2> gen_coroot, gen_root;
  for (int i = 0; i < rank; ++i) {
    gen_coroot.push_back(linear_reflection(roots_, roots_.simple_roots()[i]));
    gen_root.push_back(root_reflection(roots_, roots_.simple_roots()[i]));
  }
  coroot_action_.push_back(identity_matrix());
  root_action_.push_back(identity_matrix());
  for (std::size_t head = 0; head < coroot_action_.size(); ++head) {
    for (int i = 0; i < rank; ++i) {
      Mat2 m = mat_mul(coroot_action_[head], gen_coroot[i]);
      if (std::find(coroot_action_.begin(), coroot_action_.end(), m) == coroot_action_.end()) {
        coroot_action_.push_back(m);
        root_action_.push_back(mat_mul(root_action_[head], gen_root[i]));
      }
    }
  }
  const int n = finite_order();
  mul_.assign(n, std::vector<std::uint8_t>(n, 0));
  inv_.assign(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      mul_[a][b] = static_cast<std::uint8_t>(finite_index(mat_mul(coroot_action_[a], coroot_action_[b])));
      if (mul_[a][b] == 0) inv_[a] = static_cast<std::uint8_t>(b);
    }
  }

  const Root& theta = roots_.highest_root();
  generators_.push_back(Element{static_cast<std::uint8_t>(finite_index(linear_reflection(roots_, theta))),
                                roots_.coroot(theta)});
  for (int i = 0; i < rank; ++i) {
    generators_.push_back(Element{static_cast<std::uint8_t>(finite_index(gen_coroot[i])), Vec2{}});
  }

  // Common denominator of the fundamental alcove's vertices and barycenter.
  Int scale = 1;
  auto absorb = [&scale](const RationalPoint& p) {
    for (const auto& c : p.coords) scale = std::lcm(scale, c.denominator());
  };
  for (const auto& v : roots_.alcove_vertices()) absorb(v);
  absorb(roots_.alcove_barycenter());
  scale_ = scale;
  auto scaled = [scale](const RationalPoint& p) {
    Vec2 out{};
    for (int i = 0; i < 2; ++i) {
      const Rational s = p.coords[i] * scale;
      out[i] = s.numerator();
    }
    return out;
  };
  scaled_b0_ = scaled(roots_.alcove_barycenter());
  for (const auto& v : roots_.alcove_vertices()) scaled_vertices_.push_back(scaled(v));

  const int ng = num_generators();
  for (int i = 0; i < ng; ++i) {
    for (int j = 0; j < ng; ++j) {
      const Element g = multiply(generator(i), generator(j));
      Element p = g;
      int order = 1;
      while (!(p == identity()) && order <= 12) {
        p = multiply(p, g);
        ++order;
      }
      coxeter_[i][j] = order > 12 ? 0 : order;
    }
  }
}

int GroupContext::finite_index(const Mat2& m) const {
  for (std::size_t k = 0; k < coroot_action_.size(); ++k) {
    if (coroot_action_[k] == m) return static_cast<int>(k);
  }
  throw Error("matrix is not in the finite Weyl group");
}

GeneratorSet GroupContext::all_generators() const {
  return GeneratorSet::from_mask(static_cast<std::uint8_t>((1u << num_generators()) - 1));
}

Element GroupContext::generator(int i) const {
  if (!valid_generator(i)) {
    throw InvalidWordError("generator index " + std::to_string(i) + " out of range for " +
                           std::string(tag()));
  }
  return generators_[i];
}

Element GroupContext::multiply(const Element& a, const Element& b) const {
  const Vec2 t = mat_vec(coroot_action_[a.finite], b.translation);
  return Element{mul_[a.finite][b.finite], Vec2{t[0] + a.translation[0], t[1] + a.translation[1]}};
}

Element GroupContext::mul_simple_right(const Element& w, int i) const {
  return multiply(w, generator(i));
}

Element GroupContext::mul_simple_left(int i, const Element& w) const {
  return multiply(generator(i), w);
}

Element GroupContext::inverse(const Element& w) const {
  const std::uint8_t fi = inv_[w.finite];
  const Vec2 t = mat_vec(coroot_action_[fi], w.translation);
  return Element{fi, Vec2{-t[0], -t[1]}};
}

Element GroupContext::finite_element(int index) const {
  return Element{static_cast<std::uint8_t>(index), Vec2{}};
}

Vec2 GroupContext::apply(const Element& w, const Vec2& x) const {
  const Vec2 t = mat_vec(coroot_action_[w.finite], x);
  return Vec2{t[0] + w.translation[0], t[1] + w.translation[1]};
}

RationalPoint GroupContext::apply(const Element& w, const RationalPoint& x) const {
  const Mat2& m = coroot_action_[w.finite];
  RationalPoint out;
  for (int i = 0; i < 2; ++i) {
    out.coords[i] = x.coords[0] * m[i][0] + x.coords[1] * m[i][1] + w.translation[i];
  }
  return out;
}

Root GroupContext::apply_linear(const Element& w, const Root& gamma) const {
  return Root{mat_vec(root_action_[w.finite], gamma.coords)};
}

Hyperplane GroupContext::apply(const Element& w, const Hyperplane& h) const {
  // w(H_{g,k}) = H_{w0 g, k + <lambda, w0 g>}
  const Root image = apply_linear(w, h.direction);
  return make_hyperplane(roots_, image, h.level + roots_.pairing(w.translation, image));
}

Vec2 GroupContext::scaled_barycenter(const Element& w) const {
  const Vec2 t = mat_vec(coroot_action_[w.finite], scaled_b0_);
  return Vec2{t[0] + scale_ * w.translation[0], t[1] + scale_ * w.translation[1]};
}

RationalPoint GroupContext::barycenter(const Element& w) const {
  return apply(w, roots_.alcove_barycenter());
}

std::vector<RationalPoint> GroupContext::alcove_vertices(const Element& w) const {
  std::vector<RationalPoint> out;
  for (const auto& v : roots_.alcove_vertices()) out.push_back(apply(w, v));
  return out;
}

Element GroupContext::reflection(const Hyperplane& h) const {
  const Vec2 cv = roots_.coroot(h.direction);
  return Element{static_cast<std::uint8_t>(finite_index(linear_reflection(roots_, h.direction))),
                 Vec2{h.level * cv[0], h.level * cv[1]}};
}

Hyperplane GroupContext::base_wall(int i) const {
  if (i == 0) return Hyperplane{roots_.highest_root(), 1};
  return Hyperplane{roots_.simple_roots()[i - 1], 0};
}

Hyperplane GroupContext::panel_wall(const Element& w, int i) const {
  return apply(w, base_wall(i));
}

Element from_word(const GroupContext& ctx, const Word& w) {
  Element e = ctx.identity();
  for (int i : w) e = ctx.mul_simple_right(e, i);
  return e;
}

Element mul_simple_right(const GroupContext& ctx, const Element& w, int i) {
  return ctx.mul_simple_right(w, i);
}

int length(const GroupContext& ctx, const Element& w) {
  const RootSystem& rs = ctx.roots();
  const Int scale = ctx.barycenter_scale();
  const Vec2 b = ctx.scaled_barycenter(w);
  const Vec2 b0 = ctx.scaled_barycenter(ctx.identity());
  Int count = 0;
  for (const auto& gamma : rs.positive_roots()) {
    // Neither pairing is a multiple of scale: barycenters are interior.
    const Int here = floor_div(rs.pairing(b, gamma), scale);
    const Int base = floor_div(rs.pairing(b0, gamma), scale);
    count += here > base ? here - base : base - here;
  }
  return static_cast<int>(count);
}

GeneratorSet right_descents(const GroupContext& ctx, const Element& w) {
  const int l = length(ctx, w);
  GeneratorSet d;
  for (int i = 0; i < ctx.num_generators(); ++i) {
    if (length(ctx, ctx.mul_simple_right(w, i)) < l) d.insert(i);
  }
  return d;
}

GeneratorSet left_descents(const GroupContext& ctx, const Element& w) {
  const int l = length(ctx, w);
  GeneratorSet d;
  for (int i = 0; i < ctx.num_generators(); ++i) {
    if (length(ctx, ctx.mul_simple_left(i, w)) < l) d.insert(i);
  }
  return d;
}

Word reduced_word(const GroupContext& ctx, const Element& w) {
  Word letters;
  Element cur = w;
  int l = length(ctx, cur);
  while (l > 0) {
    int chosen = -1;
    for (int i = 0; i < ctx.num_generators(); ++i) {
      if (length(ctx, ctx.mul_simple_right(cur, i)) < l) {
        chosen = i;
        break;
      }
    }
    if (chosen < 0) throw Error("reduced_word: no descent for an element of positive length");
    letters.push_back(chosen);
    cur = ctx.mul_simple_right(cur, chosen);
    --l;
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

namespace {

void collect_reduced_words(const GroupContext& ctx, const Element& w, Word& suffix,
                           std::vector<Word>& out) {
  const GeneratorSet d = right_descents(ctx, w);
  if (d.empty()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i : d.members()) {
    suffix.push_back(i);
    collect_reduced_words(ctx, ctx.mul_simple_right(w, i), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

std::vector<Word> reduced_words(const GroupContext& ctx, const Element& w) {
  std::vector<Word> out;
  Word suffix;
  collect_reduced_words(ctx, w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Element> parabolic_elements(const GroupContext& ctx, GeneratorSet J) {
  if ((J | ctx.all_generators()) != ctx.all_generators()) {
    throw PreconditionError("parabolic_elements: generator outside I");
  }
  if (J == ctx.all_generators()) {
    throw PreconditionError("parabolic_elements: W_I is infinite");
  }
  std::vector<Element> out{ctx.identity()};
  ElementSet seen{ctx.identity()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i : J.members()) {
      Element next = ctx.mul_simple_right(out[head], i);
      if (seen.insert(next).second) out.push_back(next);
    }
  }
  return out;
}

std::vector<std::vector<Element>> enumerate_shells(const GroupContext& ctx, int max_length) {
  std::vector<std::vector<Element>> shells;
  if (max_length < 0) return shells;
  shells.push_back({ctx.identity()});
  for (int k = 1; k <= max_length; ++k) {
    std::vector<Element> next;
    ElementSet seen;
    for (const auto& w : shells.back()) {
      for (int i = 0; i < ctx.num_generators(); ++i) {
        Element v = ctx.mul_simple_right(w, i);
        if (length(ctx, v) == k && seen.insert(v).second) next.push_back(v);
      }
    }
    shells.push_back(std::move(next));
  }
  return shells;
}

std::vector<Element> enumerate_by_length(const GroupContext& ctx, int max_length) {
  std::vector<Element> out;
  for (auto& shell : enumerate_shells(ctx, max_length)) {
    out.insert(out.end(), shell.begin(), shell.end());
  }
  return out;
}

bool is_fundamental_chamber(const GroupContext& ctx, const Element& w) {
  if (!is_plane_type(ctx.type())) {
    throw TypeUnsupportedError("is_fundamental_chamber: plane types only");
  }
  const int l = length(ctx, w);
  for (int i = 1; i < ctx.num_generators(); ++i) {
    if (length(ctx, ctx.mul_simple_left(i, w)) < l) return false;
  }
  return true;
}

Word parse_word(const GroupContext& ctx, std::string_view digits) {
  Word w;
  if (digits == "e") return w;
  for (char c : digits) {
    if (c < '0' || c > '9' || !ctx.valid_generator(c - '0')) {
      throw InvalidWordError("malformed word '" + std::string(digits) + "': letters must be digits 0-" +
                             std::to_string(ctx.num_generators() - 1) + " for " + std::string(ctx.tag()));
    }
    w.push_back(c - '0');
  }
  return w;
}

std::string format_word(const Word& w) {
  std::string s;
  for (int i : w) s += static_cast<char>('0' + i);
  return s;
}

std::string to_word_string(const GroupContext& ctx, const Element& w) {
  return format_word(reduced_word(ctx, w));
}

bool canonical_less(const GroupContext& ctx, const Element& a, const Element& b) {
  const int la = length(ctx, a), lb = length(ctx, b);
  if (la != lb) return la < lb;
  return to_word_string(ctx, a) < to_word_string(ctx, b);
}

std::vector<Element> sorted_canonically(const GroupContext& ctx, const ElementSet& s) {
  std::vector<std::pair<std::pair<int, std::string>, Element>> keyed;
  keyed.reserve(s.size());
  for (const auto& e : s) keyed.push_back({{length(ctx, e), to_word_string(ctx, e)}, e});
  std::sort(keyed.begin(), keyed.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Element> out;
  out.reserve(keyed.size());
  for (auto& k : keyed) out.push_back(k.second);
  return out;
}

}  // namespace alcove
