#include "alcove/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <regex>
#include <sstream>
#include <tuple>

namespace alcove {

namespace {

struct Pt {
  double x = 0, y = 0;
};

Pt operator+(Pt a, Pt b) { return {a.x + b.x, a.y + b.y}; }
Pt operator-(Pt a, Pt b) { return {a.x - b.x, a.y - b.y}; }
Pt operator*(double s, Pt a) { return {s * a.x, s * a.y}; }
Pt mid(Pt a, Pt b) { return 0.5 * (a + b); }

constexpr double kPixelsPerUnit = 60.0;
constexpr double kStripHeight = 0.5;

std::string num(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  std::string s = buf;
  if (s == "-0.000000") s = "0.000000";
  return s;
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::string word_label(const GroupContext& ctx, const Element& x) {
  const std::string s = to_word_string(ctx, x);
  return s.empty() ? "e" : s;
}

// Cartesian realisation of the simple-coroot basis from the Gram matrix of
// the coroots; y grows downwards as in SVG.
class Embedding {
 public:
  explicit Embedding(const GroupContext& ctx) : ctx_(ctx), plane_(is_plane_type(ctx.type())) {
    const Mat2& sym = ctx.roots().sym_form();
    auto gram = [&](int i, int j) {
      return 4.0 * static_cast<double>(sym[i][j]) /
             (static_cast<double>(sym[i][i]) * static_cast<double>(sym[j][j]));
    };
    const double l1 = std::sqrt(gram(0, 0));
    e1_ = {l1, 0};
    if (plane_) {
      const double c = gram(0, 1) / l1;
      e2_ = {c, std::sqrt(std::max(0.0, gram(1, 1) - c * c))};
    } else {
      e2_ = {0, 1};
    }
    double longest = 0;
    const auto v = fundamental_vertices();
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) {
        const Pt d = v[i] - v[j];
        longest = std::max(longest, std::hypot(d.x, d.y));
      }
    }
    unit_ = kPixelsPerUnit / longest;
  }

  Pt point(const RationalPoint& p) const {
    const Pt q = to_double(p.coords[0]) * e1_ + to_double(p.coords[1]) * e2_;
    return {unit_ * q.x, -unit_ * q.y};
  }

  std::vector<Pt> polygon(const Element& x) const {
    const auto v = vertices(x);
    if (plane_) return v;
    const double h = 0.5 * kStripHeight * kPixelsPerUnit;
    return {{v[0].x, -h}, {v[1].x, -h}, {v[1].x, h}, {v[0].x, h}};
  }

  std::pair<Pt, Pt> panel(const Element& x, int type) const {
    const auto v = vertices(x);
    if (!plane_) {
      const double h = 0.5 * kStripHeight * kPixelsPerUnit;
      const Pt p = v[1 - type];
      return {{p.x, -h}, {p.x, h}};
    }
    std::vector<Pt> ends;
    for (int k = 0; k < 3; ++k) {
      if (k != type) ends.push_back(v[k]);
    }
    return {ends[0], ends[1]};
  }

  Pt center(const Element& x) const {
    const auto v = vertices(x);
    Pt c;
    for (const auto& p : v) c = c + p;
    return (1.0 / static_cast<double>(v.size())) * c;
  }

  // Two far-apart points on the wall; the caller clips.
  std::pair<Pt, Pt> line(const Hyperplane& h, double reach) const {
    const RootSystem& rs = ctx_.roots();
    const double f1 = static_cast<double>(rs.pairing(Vec2{1, 0}, h.direction));
    const double f2 = plane_ ? static_cast<double>(rs.pairing(Vec2{0, 1}, h.direction)) : 0.0;
    // Normal in Cartesian coordinates: B^{-T} f with B = [e1 e2].
    const double det = e1_.x * e2_.y - e2_.x * e1_.y;
    const Pt n{(e2_.y * f1 - e1_.y * f2) / det, (-e2_.x * f1 + e1_.x * f2) / det};
    const double nn = n.x * n.x + n.y * n.y;
    const Pt p0 = (static_cast<double>(h.level) / nn) * n;
    const double len = std::sqrt(nn);
    const Pt dir{-n.y / len, n.x / len};
    const Pt a = p0 - reach * dir, b = p0 + reach * dir;
    return {{unit_ * a.x, -unit_ * a.y}, {unit_ * b.x, -unit_ * b.y}};
  }

  double unit() const { return unit_; }

 private:
  std::vector<Pt> vertices(const Element& x) const {
    std::vector<Pt> out;
    for (const auto& p : ctx_.alcove_vertices(x)) out.push_back(point(p));
    return out;
  }

  std::vector<Pt> fundamental_vertices() const {
    std::vector<Pt> out;
    for (const auto& p : ctx_.roots().alcove_vertices()) {
      out.push_back(to_double(p.coords[0]) * e1_ + to_double(p.coords[1]) * e2_);
    }
    if (!plane_) out.push_back(out[0] + Pt{0, kStripHeight});
    return out;
  }

  const GroupContext& ctx_;
  bool plane_;
  Pt e1_, e2_;
  double unit_ = 1;
};

std::string points_attr(const std::vector<Pt>& pts) {
  std::string s;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) s += ' ';
    s += num(pts[i].x) + "," + num(pts[i].y);
  }
  return s;
}

std::string segment(Pt a, Pt b) {
  return "<line x1=\"" + num(a.x) + "\" y1=\"" + num(a.y) + "\" x2=\"" + num(b.x) + "\" y2=\"" + num(b.y) + "\"/>";
}

using EdgeKey = std::tuple<Rational, Rational, Rational, Rational>;

}  // namespace

std::string render_svg(const GroupContext& ctx, const Scene& scene) {
  if (scene.radius < 0) throw PreconditionError("render_svg: negative view radius");
  const Embedding emb(ctx);
  const bool plane = is_plane_type(ctx.type());
  const auto background = enumerate_by_length(ctx, scene.radius);

  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const auto& x : background) {
    for (const auto& p : emb.polygon(x)) {
      if (first) {
        minx = maxx = p.x;
        miny = maxy = p.y;
        first = false;
      }
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  }
  const double margin = 0.15 * kPixelsPerUnit;
  minx -= margin;
  miny -= margin;
  maxx += margin;
  maxy += margin;
  const double width = maxx - minx, height = maxy - miny;
  const double reach = 2.0 * (std::hypot(minx, miny) + std::hypot(maxx, maxy)) / emb.unit();

  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << num(width) << "\" height=\""
      << num(height) << "\" viewBox=\"" << num(minx) << " " << num(miny) << " " << num(width) << " "
      << num(height) << "\">\n"
      << "<title>" << ctx.tag() << " alcoves, radius " << scene.radius << "</title>\n"
      << "<defs>\n<clipPath id=\"view\"><rect x=\"" << num(minx) << "\" y=\"" << num(miny) << "\" width=\""
      << num(width) << "\" height=\"" << num(height) << "\"/></clipPath>\n";
  for (std::size_t li = 0; li < scene.layers.size(); ++li) {
    if (const auto* g = std::get_if<GalleryLayer>(&scene.layers[li])) {
      out << "<marker id=\"arrow-" << li << "\" viewBox=\"0 0 10 10\" refX=\"8\" refY=\"5\" markerWidth=\"6\" "
          << "markerHeight=\"6\" orient=\"auto\"><path d=\"M0,0 L10,5 L0,10 z\" fill=\"" << g->color
          << "\"/></marker>\n";
    }
  }
  out << "</defs>\n<rect x=\"" << num(minx) << "\" y=\"" << num(miny) << "\" width=\"" << num(width)
      << "\" height=\"" << num(height) << "\" fill=\"#ffffff\"/>\n"
      << "<g clip-path=\"url(#view)\">\n";

  // Tiling: every edge once.
  {
    std::map<EdgeKey, std::pair<Pt, Pt>> edges;
    const int ng = ctx.num_generators();
    for (const auto& x : background) {
      const auto v = ctx.alcove_vertices(x);
      for (int j = 0; j < ng; ++j) {
        if (plane) {
          RationalPoint a = v[j == 0 ? 1 : 0], b = v[j == 2 ? 1 : 2];
          if (std::tie(b.coords[0], b.coords[1]) < std::tie(a.coords[0], a.coords[1])) std::swap(a, b);
          edges.emplace(EdgeKey{a.coords[0], a.coords[1], b.coords[0], b.coords[1]}, emb.panel(x, j));
        } else {
          const RationalPoint& p = v[1 - j];
          edges.emplace(EdgeKey{p.coords[0], p.coords[1], p.coords[0], p.coords[1]}, emb.panel(x, j));
        }
      }
      if (!plane) {
        const auto poly = emb.polygon(x);
        edges.emplace(EdgeKey{v[0].coords[0], 1, v[1].coords[0], 1}, std::pair{poly[0], poly[1]});
        edges.emplace(EdgeKey{v[0].coords[0], -1, v[1].coords[0], -1}, std::pair{poly[3], poly[2]});
      }
    }
    out << "<g class=\"tiling\" stroke=\"#b0b0b0\" stroke-width=\"0.8\" fill=\"none\">\n";
    for (const auto& [key, seg] : edges) out << segment(seg.first, seg.second) << "\n";
    out << "</g>\n";
    out << "<polygon class=\"fundamental\" points=\"" << points_attr(emb.polygon(ctx.identity()))
        << "\" fill=\"none\" stroke=\"#000000\" stroke-width=\"1.6\"/>\n";
  }

  std::vector<std::pair<Pt, std::string>> labels;
  for (std::size_t li = 0; li < scene.layers.size(); ++li) {
    const Layer& layer = scene.layers[li];
    if (const auto* f = std::get_if<FillLayer>(&layer)) {
      out << "<g class=\"layer-fill\" fill=\"" << f->color
          << "\" fill-opacity=\"0.85\" stroke=\"#808080\" stroke-width=\"0.6\">\n";
      for (const auto& x : f->alcoves) {
        const std::string w = word_label(ctx, x);
        out << "<polygon class=\"fill\" data-word=\"" << w << "\" points=\"" << points_attr(emb.polygon(x))
            << "\"/>\n";
        labels.emplace_back(emb.center(x), w);
      }
      out << "</g>\n";
    } else if (const auto* p = std::get_if<PanelLayer>(&layer)) {
      out << "<g class=\"layer-panels\" stroke=\"" << p->color
          << "\" stroke-width=\"3\" stroke-linecap=\"round\">\n";
      for (const auto& bp : p->panels) {
        const auto [a, b] = emb.panel(bp.alcove, bp.type);
        out << segment(a, b) << "\n";
      }
      out << "</g>\n";
    } else if (const auto* h = std::get_if<HyperplaneLayer>(&layer)) {
      const auto [a, b] = emb.line(h->wall, reach);
      out << "<g class=\"layer-wall\" data-wall=\"" << to_string(h->wall) << "\" stroke=\"" << h->color
          << "\" stroke-width=\"2\">" << segment(a, b) << "</g>\n";
    } else if (const auto* g = std::get_if<GalleryLayer>(&layer)) {
      const auto cells = alcove_sequence(ctx, g->gallery);
      std::vector<Pt> path{emb.center(cells[0])};
      for (std::size_t t = 1; t < cells.size(); ++t) {
        const auto [a, b] = emb.panel(cells[t - 1], g->gallery.steps[t - 1].type);
        const Pt m = mid(a, b);
        // Stop short of the panel so a fold reads as a bounce.
        path.push_back(path.back() + 0.85 * (m - path.back()));
        path.push_back(emb.center(cells[t]));
      }
      out << "<polyline class=\"layer-gallery\" data-gallery=\"" << format_gallery(g->gallery)
          << "\" points=\"" << points_attr(path) << "\" fill=\"none\" stroke=\"" << g->color
          << "\" stroke-width=\"2\"" << (g->dashed ? " stroke-dasharray=\"6,4\"" : "")
          << " marker-end=\"url(#arrow-" << li << ")\"/>\n";
    }
  }

  if (scene.labels && !labels.empty()) {
    out << "<g class=\"labels\" font-family=\"sans-serif\" font-size=\"6\" text-anchor=\"middle\" "
           "fill=\"#202020\">\n";
    for (const auto& [pt, text] : labels) {
      out << "<text x=\"" << num(pt.x) << "\" y=\"" << num(pt.y + 2.5) << "\">" << text << "</text>\n";
    }
    out << "</g>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

Scene annex_scene(const GroupContext& ctx, const Annex& a) {
  Scene s;
  s.radius = std::max(4, a.max_member_length + 2);
  s.layers.push_back(FillLayer{sorted_canonically(ctx, a.members), "#ffe066"});
  s.layers.push_back(PanelLayer{a.boundary, "#c0392b"});
  PanelLayer owner{{}, "#000000"};
  for (int j = 0; j < ctx.num_generators(); ++j) owner.panels.push_back(BoundaryPanel{a.owner, j});
  s.layers.push_back(owner);
  return s;
}

Scene set_scene(const GroupContext& ctx, const ElementSet& set, const std::string& color) {
  Scene s;
  int longest = 0;
  for (const auto& x : set) longest = std::max(longest, length(ctx, x));
  s.radius = std::max(4, longest + 2);
  s.layers.push_back(FillLayer{sorted_canonically(ctx, set), color});
  return s;
}

Scene gallery_scene(const GroupContext& ctx, const Gallery& g) {
  Scene s;
  int longest = 0;
  for (const auto& x : alcove_sequence(ctx, g)) longest = std::max(longest, length(ctx, x));
  s.radius = std::max(4, longest + 2);
  s.layers.push_back(GalleryLayer{g});
  return s;
}

std::vector<std::string> filled_words(const std::string& svg) {
  static const std::regex re("class=\"fill\" data-word=\"([^\"]*)\"");
  std::vector<std::string> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back((*it)[1].str());
  }
  return out;
}

}  // namespace alcove
