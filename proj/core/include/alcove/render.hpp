#pragma once

// SVG pictures of the tilings.  Exact coordinates are converted to floats only
// while emitting, with six decimals, so equal scenes give equal bytes.

#include <string>
#include <variant>
#include <vector>

#include "alcove/annex.hpp"
#include "alcove/galleries.hpp"
#include "alcove/group.hpp"

namespace alcove {

struct FillLayer {
  std::vector<Element> alcoves;
  std::string color = "#ffe066";
};

/// Panels drawn as heavy strokes, e.g. the boundary of an annex.
struct PanelLayer {
  std::vector<BoundaryPanel> panels;
  std::string color = "#c0392b";
};

struct HyperplaneLayer {
  Hyperplane wall;
  std::string color = "#1f5fbf";
};

struct GalleryLayer {
  Gallery gallery;
  std::string color = "#333333";
  bool dashed = false;
};

using Layer = std::variant<FillLayer, PanelLayer, HyperplaneLayer, GalleryLayer>;

struct Scene {
  /// Background alcoves are those of length <= radius; the view is their
  /// bounding box and everything else is clipped to it.
  int radius = 6;
  std::vector<Layer> layers;
  /// Word labels on filled alcoves.
  bool labels = false;
};

/// A complete SVG 1.1 document.  A1~ is drawn as a strip of unit cells.
/// Filled alcoves carry class="fill" and data-word="<canonical word>".
std::string render_svg(const GroupContext& ctx, const Scene& scene);

/// Yellow members and red boundary panels, with the owner outlined.
Scene annex_scene(const GroupContext& ctx, const Annex& a);
/// Grey fill of the given set.
Scene set_scene(const GroupContext& ctx, const ElementSet& s, const std::string& color = "#cfcfcf");
Scene gallery_scene(const GroupContext& ctx, const Gallery& g);

/// The data-word attributes of class="fill" polygons in document order.
std::vector<std::string> filled_words(const std::string& svg);

}  // namespace alcove
