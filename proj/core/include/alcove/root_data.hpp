#pragma once

// Exact root-system data for the rank-2 affine types and the degenerate
// dihedral type A1~.  Roots live in the simple-root basis, points of the
// ambient plane in the simple-coroot basis.  Everything here is integral or
// rational; floating point only shows up in the renderer.

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "alcove/errors.hpp"

namespace alcove {

enum class AffineType { A2, C2, G2, A1 };

/// "A2~", "C2~", "G2~" or "A1~".
std::string_view type_tag(AffineType type);

/// Inverse of type_tag.  Throws UnknownTypeError.
AffineType parse_type(std::string_view tag);

bool is_plane_type(AffineType type);

using Int = std::int64_t;
using Rational = boost::rational<Int>;
using Vec2 = std::array<Int, 2>;
using Mat2 = std::array<std::array<Int, 2>, 2>;

/// A point of the ambient plane in simple-coroot coordinates.
struct RationalPoint {
  std::array<Rational, 2> coords{};

  friend bool operator==(const RationalPoint&, const RationalPoint&) = default;
};

struct Root {
  Vec2 coords{};

  friend auto operator<=>(const Root&, const Root&) = default;
  Root operator-() const { return Root{{-coords[0], -coords[1]}}; }
};

/// The wall H_{direction, level} = { x : <x, direction> = level }.  The
/// direction is always a positive root; construct through make_hyperplane to
/// normalise a negative direction.
struct Hyperplane {
  Root direction;
  Int level = 0;

  friend auto operator<=>(const Hyperplane&, const Hyperplane&) = default;
};

class RootSystem {
 public:
  explicit RootSystem(AffineType type);

  AffineType type() const { return type_; }
  int rank() const { return rank_; }

  const std::vector<Root>& simple_roots() const { return simple_; }
  /// Positive roots, simple roots first.  For A1~ this is the single root.
  const std::vector<Root>& positive_roots() const { return positive_; }
  const Root& highest_root() const { return highest_; }

  /// cartan()[i][j] = <alpha_i^vee, alpha_j>.
  const Mat2& cartan() const { return cartan_; }
  /// sym_form()[i][j] = (alpha_i, alpha_j), scaled so that all entries are
  /// integers (the shortest root has squared length 2 in A2, 1 in C2).
  const Mat2& sym_form() const { return sym_; }

  Int inner(const Root& a, const Root& b) const;
  bool is_root(const Root& r) const;
  bool is_positive_root(const Root& r) const;

  /// gamma^vee = 2 gamma / (gamma, gamma) in simple-coroot coordinates.
  Vec2 coroot(const Root& gamma) const;
  /// <gamma^vee, delta>; always an integer.
  Int coroot_pairing(const Root& gamma, const Root& delta) const;

  /// <x, gamma> for x in simple-coroot coordinates.
  Int pairing(const Vec2& x, const Root& gamma) const;
  Rational pairing(const RationalPoint& x, const Root& gamma) const;

  /// s_i(gamma) for a finite simple reflection i in {1, .., rank}.
  Root simple_reflect(int i, const Root& gamma) const;

  /// Vertices of the fundamental alcove: the origin followed by
  /// varpi_i^vee / a_i, where theta = sum a_i alpha_i.
  const std::vector<RationalPoint>& alcove_vertices() const { return vertices_; }
  const RationalPoint& alcove_barycenter() const { return barycenter_; }

 private:
  AffineType type_;
  int rank_;
  Mat2 cartan_{};
  Mat2 sym_{};
  std::vector<Root> simple_;
  std::vector<Root> positive_;
  Root highest_;
  std::vector<RationalPoint> vertices_;
  RationalPoint barycenter_;
};

/// Full positive root set for a plane type.  Throws TypeUnsupportedError for
/// A1~, whose single root direction is handled separately.
std::vector<Root> positive_roots(const RootSystem& rs);

/// <x, gamma>.
Rational pairing(const RootSystem& rs, const RationalPoint& x, const Root& gamma);

/// s_{gamma;k}(x) = x - (<x, gamma> - k) gamma^vee.
RationalPoint affine_reflect(const RootSystem& rs, const Root& gamma, Int k,
                             const RationalPoint& x);

/// H_{gamma,k} with gamma flipped to a positive root if necessary.
Hyperplane make_hyperplane(const RootSystem& rs, const Root& gamma, Int level);

std::string to_string(const Root& r);
std::string to_string(const Hyperplane& h);

}  // namespace alcove
