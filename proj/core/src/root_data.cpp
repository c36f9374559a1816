#include "alcove/root_data.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace alcove {

namespace {

Int height(const Root& r) { return r.coords[0] + r.coords[1]; }

bool nonnegative(const Root& r) { return r.coords[0] >= 0 && r.coords[1] >= 0; }

}  // namespace

std::string_view type_tag(AffineType type) {
  switch (type) {
    case AffineType::A2: return "A2~";
    case AffineType::C2: return "C2~";
    case AffineType::G2: return "G2~";
    case AffineType::A1: return "A1~";
  }
  return "?";
}

AffineType parse_type(std::string_view tag) {
  for (auto t : {AffineType::A2, AffineType::C2, AffineType::G2, AffineType::A1}) {
    if (tag == type_tag(t)) return t;
  }
  throw UnknownTypeError("unknown affine type '" + std::string(tag) +
                         "' (expected one of A2~, C2~, G2~, A1~)");
}

bool is_plane_type(AffineType type) { return type != AffineType::A1; }

RootSystem::RootSystem(AffineType type) : type_(type), rank_(type == AffineType::A1 ? 1 : 2) {
  // (alpha_i, alpha_j); alpha_1 is the short root in C2 and G2.
  switch (type) {
    case AffineType::A2: sym_ = {{{2, -1}, {-1, 2}}}; break;
    case AffineType::C2: sym_ = {{{1, -1}, {-1, 2}}}; break;
    case AffineType::G2: sym_ = {{{2, -3}, {-3, 6}}}; break;
    // The second coordinate is a dummy axis that no root ever touches.
    case AffineType::A1: sym_ = {{{2, 0}, {0, 2}}}; break;
  }
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) cartan_[i][j] = 2 * sym_[i][j] / sym_[i][i];
  }

  for (int i = 0; i < rank_; ++i) {
    Root r;
    r.coords[i] = 1;
    simple_.push_back(r);
  }

  // Close the simple roots under the simple reflections.
  std::set<Root> seen;
  std::deque<Root> queue;
  for (const auto& s : simple_) {
    for (const auto& r : {s, -s}) {
      if (seen.insert(r).second) queue.push_back(r);
    }
  }
  while (!queue.empty()) {
    Root r = queue.front();
    queue.pop_front();
    for (int i = 1; i <= rank_; ++i) {
      Root image = simple_reflect(i, r);
      if (seen.insert(image).second) queue.push_back(image);
    }
  }
  for (const auto& r : seen) {
    if (nonnegative(r)) positive_.push_back(r);
  }
  std::sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a.coords > b.coords;
  });
  highest_ = positive_.back();

  // Fundamental alcove: vertices 0 and varpi_i^vee / a_i, where
  // <varpi_i^vee, alpha_j> = delta_ij.
  vertices_.push_back(RationalPoint{});
  if (rank_ == 1) {
    vertices_.push_back(RationalPoint{{Rational(1, cartan_[0][0]) / highest_.coords[0], Rational(0)}});
  } else {
    // Solve sum_k c_k C_kj = delta_ij, i.e. c = (C^T)^{-1} e_i.
    const Int det = cartan_[0][0] * cartan_[1][1] - cartan_[0][1] * cartan_[1][0];
    for (int i = 0; i < 2; ++i) {
      // (C^T)^{-1} = adj(C^T) / det; adj(C^T) = [[C11, -C10], [-C01, C00]].
      Rational c0 = (i == 0 ? Rational(cartan_[1][1]) : Rational(-cartan_[1][0])) / det;
      Rational c1 = (i == 0 ? Rational(-cartan_[0][1]) : Rational(cartan_[0][0])) / det;
      Rational a = highest_.coords[i];
      vertices_.push_back(RationalPoint{{c0 / a, c1 / a}});
    }
  }
  for (const auto& v : vertices_) {
    barycenter_.coords[0] += v.coords[0];
    barycenter_.coords[1] += v.coords[1];
  }
  const auto n = static_cast<Int>(vertices_.size());
  barycenter_.coords[0] /= n;
  barycenter_.coords[1] /= n;
}

Int RootSystem::inner(const Root& a, const Root& b) const {
  Int s = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) s += a.coords[i] * sym_[i][j] * b.coords[j];
  }
  return s;
}

bool RootSystem::is_root(const Root& r) const {
  return is_positive_root(r) || is_positive_root(-r);
}

bool RootSystem::is_positive_root(const Root& r) const {
  return std::find(positive_.begin(), positive_.end(), r) != positive_.end();
}

Vec2 RootSystem::coroot(const Root& gamma) const {
  const Int norm = inner(gamma, gamma);
  Vec2 c{};
  for (int j = 0; j < 2; ++j) {
    const Int num = gamma.coords[j] * sym_[j][j];
    if (num % norm != 0) throw Error("non-integral coroot for " + to_string(gamma));
    c[j] = num / norm;
  }
  return c;
}

Int RootSystem::coroot_pairing(const Root& gamma, const Root& delta) const {
  return pairing(coroot(gamma), delta);
}

Int RootSystem::pairing(const Vec2& x, const Root& gamma) const {
  Int s = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) s += x[i] * cartan_[i][j] * gamma.coords[j];
  }
  return s;
}

Rational RootSystem::pairing(const RationalPoint& x, const Root& gamma) const {
  Rational s = 0;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) s += x.coords[i] * (cartan_[i][j] * gamma.coords[j]);
  }
  return s;
}

Root RootSystem::simple_reflect(int i, const Root& gamma) const {
  // s_i(gamma) = gamma - <alpha_i^vee, gamma> alpha_i
  const int k = i - 1;
  Int c = 0;
  for (int j = 0; j < 2; ++j) c += cartan_[k][j] * gamma.coords[j];
  Root out = gamma;
  out.coords[k] -= c;
  return out;
}

std::vector<Root> positive_roots(const RootSystem& rs) {
  if (!is_plane_type(rs.type())) {
    throw TypeUnsupportedError("positive_roots: A1~ has a single root direction");
  }
  return rs.positive_roots();
}

Rational pairing(const RootSystem& rs, const RationalPoint& x, const Root& gamma) {
  return rs.pairing(x, gamma);
}

RationalPoint affine_reflect(const RootSystem& rs, const Root& gamma, Int k,
                             const RationalPoint& x) {
  const Rational shift = rs.pairing(x, gamma) - k;
  const Vec2 cv = rs.coroot(gamma);
  RationalPoint out = x;
  for (int i = 0; i < 2; ++i) out.coords[i] -= shift * cv[i];
  return out;
}

Hyperplane make_hyperplane(const RootSystem& rs, const Root& gamma, Int level) {
  if (rs.is_positive_root(gamma)) return Hyperplane{gamma, level};
  if (rs.is_positive_root(-gamma)) return Hyperplane{-gamma, -level};
  throw Error("make_hyperplane: " + to_string(gamma) + " is not a root");
}

std::string to_string(const Root& r) {
  std::ostringstream os;
  os << '(' << r.coords[0] << ',' << r.coords[1] << ')';
  return os.str();
}

std::string to_string(const Hyperplane& h) {
  std::ostringstream os;
  os << "H[" << to_string(h.direction) << ',' << h.level << ']';
  return os.str();
}

}  // namespace alcove
