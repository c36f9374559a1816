#pragma once

// Affine Weyl group elements and the operations every other module builds
// on: multiplication, length, reduced words, descents and enumeration.
//
// An element is stored as t_lambda . w0: first the finite Weyl group part w0
// (an index into the context's table of W0), then translation by the coroot
// lattice vector lambda.  It acts on the plane by x -> w0(x) + lambda, and the
// alcove of w is w applied to the fundamental alcove.  Generator 0 is the
// affine reflection in H_{theta,1}; generators 1..rank are the finite simple
// reflections.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "alcove/root_data.hpp"

namespace alcove {

struct Element {
  std::uint8_t finite = 0;  // index into GroupContext's W0 table; 0 = identity
  Vec2 translation{};

  friend bool operator==(const Element&, const Element&) = default;
};

struct ElementHash {
  std::size_t operator()(const Element& e) const noexcept {
    std::size_t h = e.finite;
    h = h * 0x9E3779B97F4A7C15ULL + static_cast<std::size_t>(e.translation[0]);
    h ^= (h >> 29);
    h = h * 0xBF58476D1CE4E5B9ULL + static_cast<std::size_t>(e.translation[1]);
    h ^= (h >> 31);
    return h;
  }
};

using ElementSet = std::unordered_set<Element, ElementHash>;
template <typename V>
using ElementMap = std::unordered_map<Element, V, ElementHash>;

using Word = std::vector<int>;

/// A subset of the generator index set I, as a bit mask.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  GeneratorSet(std::initializer_list<int> gens) {
    for (int g : gens) insert(g);
  }
  static constexpr GeneratorSet from_mask(std::uint8_t m) {
    GeneratorSet s;
    s.mask_ = m;
    return s;
  }

  void insert(int g) { mask_ |= static_cast<std::uint8_t>(1u << g); }
  void erase(int g) { mask_ &= static_cast<std::uint8_t>(~(1u << g)); }
  bool contains(int g) const { return (mask_ >> g) & 1u; }
  bool empty() const { return mask_ == 0; }
  int size() const { return __builtin_popcount(mask_); }
  std::uint8_t mask() const { return mask_; }
  std::vector<int> members() const;

  GeneratorSet operator&(GeneratorSet o) const { return from_mask(mask_ & o.mask_); }
  GeneratorSet operator|(GeneratorSet o) const { return from_mask(mask_ | o.mask_); }
  friend bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint8_t mask_ = 0;
};

/// "{0,2}".
std::string to_string(GeneratorSet s);

class GroupContext {
 public:
  explicit GroupContext(AffineType type);
  /// From "A2~", "C2~", "G2~" or "A1~".
  explicit GroupContext(std::string_view tag);

  AffineType type() const { return roots_.type(); }
  std::string_view tag() const { return type_tag(type()); }
  const RootSystem& roots() const { return roots_; }

  /// |I|: 3 for the plane types, 2 for A1~.
  int num_generators() const { return roots_.rank() + 1; }
  GeneratorSet all_generators() const;
  bool valid_generator(int i) const { return i >= 0 && i < num_generators(); }

  Element identity() const { return Element{}; }
  Element generator(int i) const;

  Element multiply(const Element& a, const Element& b) const;
  Element mul_simple_right(const Element& w, int i) const;
  Element mul_simple_left(int i, const Element& w) const;
  Element inverse(const Element& w) const;

  /// |W0|.
  int finite_order() const { return static_cast<int>(coroot_action_.size()); }
  /// The finite element with the given index, as a group element.
  Element finite_element(int index) const;
  /// Action of a W0 element on simple-coroot coordinates.
  const Mat2& coroot_action(int finite) const { return coroot_action_[finite]; }
  /// Action of a W0 element on simple-root coordinates.
  const Mat2& root_action(int finite) const { return root_action_[finite]; }

  Vec2 apply(const Element& w, const Vec2& x) const;
  RationalPoint apply(const Element& w, const RationalPoint& x) const;
  Root apply_linear(const Element& w, const Root& gamma) const;
  /// w(H): the image of a wall under w.
  Hyperplane apply(const Element& w, const Hyperplane& h) const;

  /// The barycenter of w's alcove, multiplied by barycenter_scale() so that
  /// it is an integer vector.
  Vec2 scaled_barycenter(const Element& w) const;
  Int barycenter_scale() const { return scale_; }
  RationalPoint barycenter(const Element& w) const;
  /// Vertices of w's alcove, in the same order as the fundamental alcove's.
  std::vector<RationalPoint> alcove_vertices(const Element& w) const;

  /// The group element acting as the affine reflection in h.
  Element reflection(const Hyperplane& h) const;
  /// The wall fixed by s_i in the fundamental alcove.
  Hyperplane base_wall(int i) const;
  /// The wall containing the type-i panel of w's alcove.
  Hyperplane panel_wall(const Element& w, int i) const;

  /// m_ij; 0 stands for infinity.
  int coxeter_entry(int i, int j) const { return coxeter_[i][j]; }

 private:
  int finite_index(const Mat2& coroot_matrix) const;

  RootSystem roots_;
  std::vector<Mat2> coroot_action_;
  std::vector<Mat2> root_action_;
  std::vector<std::vector<std::uint8_t>> mul_;
  std::vector<std::uint8_t> inv_;
  std::vector<Element> generators_;
  Vec2 scaled_b0_{};
  Int scale_ = 1;
  std::vector<Vec2> scaled_vertices_;
  std::array<std::array<int, 3>, 3> coxeter_{};
};

Element from_word(const GroupContext& ctx, const Word& w);
Element mul_simple_right(const GroupContext& ctx, const Element& w, int i);

/// Number of walls H_{gamma,k} separating the fundamental alcove from w's.
int length(const GroupContext& ctx, const Element& w);

/// Greedy descent walk; ties go to the smallest generator.
Word reduced_word(const GroupContext& ctx, const Element& w);
/// Every reduced word of w, lexicographically sorted.
std::vector<Word> reduced_words(const GroupContext& ctx, const Element& w);

GeneratorSet right_descents(const GroupContext& ctx, const Element& w);
GeneratorSet left_descents(const GroupContext& ctx, const Element& w);

/// All of W_J for a proper subset J of I.  Throws PreconditionError for J = I.
std::vector<Element> parabolic_elements(const GroupContext& ctx, GeneratorSet J);

/// Every element of length <= max_length, grouped by length shell.
std::vector<std::vector<Element>> enumerate_shells(const GroupContext& ctx, int max_length);
/// Flattened enumerate_shells.
std::vector<Element> enumerate_by_length(const GroupContext& ctx, int max_length);

/// l(s_i x) > l(x) for every finite generator i.  Plane types only.
bool is_fundamental_chamber(const GroupContext& ctx, const Element& w);

/// Parses a digit string such as "0120102".  The empty string and "e" denote
/// the identity.  Throws InvalidWordError.
Word parse_word(const GroupContext& ctx, std::string_view digits);
std::string format_word(const Word& w);
/// Canonical serialisation: the greedy reduced word, "" for the identity.
std::string to_word_string(const GroupContext& ctx, const Element& w);

/// Sort key used wherever element sets are printed: length, then word.
bool canonical_less(const GroupContext& ctx, const Element& a, const Element& b);
std::vector<Element> sorted_canonically(const GroupContext& ctx, const ElementSet& s);

}  // namespace alcove
