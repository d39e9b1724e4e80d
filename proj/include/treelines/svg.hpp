#pragma once

// SVG pictures of arrangements, regions, embedded trees and doors.

#include <map>
#include <string>
#include <vector>

#include "treelines/lineset.hpp"
#include "treelines/tree_embed.hpp"

namespace treelines {

struct Viewport {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
};

struct SvgPoint {
  double x = 0, y = 0;
};

struct SvgItem {
  std::string cls;    // css class from the style table
  std::string title;  // tooltip, may be empty
  std::vector<SvgPoint> pts;
};

/// Layers are drawn in member order. Coordinates are in the plane (y up).
struct SvgScene {
  Viewport viewport;
  std::vector<SvgItem> regions;    // polygons
  std::vector<SvgItem> lines;      // two-point polylines
  std::vector<SvgItem> doors;      // polylines or polygons
  std::vector<SvgItem> edges;      // two-point polylines
  std::vector<SvgItem> crossings;  // single points
  std::vector<SvgItem> vertices;   // single points
  std::map<std::string, std::string> style;
};

/// Lines clipped to a viewport fitted around their crossings and `extra`
/// with a 10% margin, plus the crossings.
SvgScene arrangement_scene(const LineSet& ls, const std::vector<Point>& extra = {});

/// Region hulls, unbounded ones cut at the viewport.
void add_regions(SvgScene& scene, const RegionAtlas& atlas);

void add_tree(SvgScene& scene, const LineSet& ls, const Tree& t, const Assignment& asg, const Embedding& emb);

void add_door(SvgScene& scene, const std::vector<Point>& door);

/// SVG 1.1 text. Identical scenes give identical bytes. Throws EmptyScene
/// when no layer holds anything.
std::string render_svg(const SvgScene& scene);

}  // namespace treelines
