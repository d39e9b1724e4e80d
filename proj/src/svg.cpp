#include "treelines/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace treelines {

namespace {

SvgPoint to_svg(const Point& p) { return {p.x.get_d(), p.y.get_d()}; }

std::string num(double v) {
  if (v == 0) v = 0;  // no "-0"
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

// Clips y = s x - b to the viewport; false when it misses.
bool clip_line(const Line& l, const Viewport& vp, SvgPoint& a, SvgPoint& b) {
  const double s = l.slope.get_d(), off = l.dual_offset.get_d();
  double lo = vp.xmin, hi = vp.xmax;
  if (s != 0) {
    double x1 = (vp.ymin + off) / s, x2 = (vp.ymax + off) / s;
    if (x1 > x2) std::swap(x1, x2);
    lo = std::max(lo, x1);
    hi = std::min(hi, x2);
  } else if (-off < vp.ymin || -off > vp.ymax) {
    return false;
  }
  if (lo >= hi) return false;
  a = {lo, s * lo - off};
  b = {hi, s * hi - off};
  return true;
}

const char* const kPalette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231", "#911eb4",
                                "#42d4f4", "#f032e6", "#bfef45", "#469990", "#9a6324"};
constexpr int kPaletteSize = 10;

void default_style(SvgScene& s) {
  s.style["line"] = "fill:none;stroke:#444444";
  s.style["crossing"] = "fill:#444444";
  s.style["edge"] = "fill:none;stroke:#000000";
  s.style["vertex"] = "fill:#ffffff;stroke:#000000";
  s.style["door"] = "fill:none;stroke:#d00000;stroke-dasharray:4,2";
}

std::string points_attr(const std::vector<SvgPoint>& pts) {
  std::string out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (i) out += ' ';
    out += num(pts[i].x) + "," + num(-pts[i].y);
  }
  return out;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char ch : s) {
    switch (ch) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += ch;
    }
  }
  return out;
}

}  // namespace

SvgScene arrangement_scene(const LineSet& ls, const std::vector<Point>& extra) {
  SvgScene scene;
  default_style(scene);
  std::vector<SvgPoint> pts;
  for (int i = 1; i <= static_cast<int>(ls.size()); ++i) {
    for (int j = i + 1; j <= static_cast<int>(ls.size()); ++j) {
      const Point p = line_intersection(ls.line(i), ls.line(j));
      pts.push_back(to_svg(p));
      scene.crossings.push_back({"crossing", "l" + std::to_string(i) + " x l" + std::to_string(j), {pts.back()}});
    }
  }
  for (const Point& p : extra) pts.push_back(to_svg(p));

  Viewport& vp = scene.viewport;
  if (!pts.empty()) {
    vp.xmin = vp.xmax = pts[0].x;
    vp.ymin = vp.ymax = pts[0].y;
    for (const SvgPoint& p : pts) {
      vp.xmin = std::min(vp.xmin, p.x);
      vp.xmax = std::max(vp.xmax, p.x);
      vp.ymin = std::min(vp.ymin, p.y);
      vp.ymax = std::max(vp.ymax, p.y);
    }
    double w = vp.xmax - vp.xmin, h = vp.ymax - vp.ymin;
    if (w == 0) w = std::max(h, 1.0);
    if (h == 0) h = std::max(w, 1.0);
    const double cx = (vp.xmin + vp.xmax) / 2, cy = (vp.ymin + vp.ymax) / 2;
    vp = {cx - 0.6 * w, cx + 0.6 * w, cy - 0.6 * h, cy + 0.6 * h};
  }

  for (int i = 1; i <= static_cast<int>(ls.size()); ++i) {
    SvgPoint a, b;
    if (clip_line(ls.line(i), vp, a, b)) scene.lines.push_back({"line", "l" + std::to_string(i), {a, b}});
  }
  return scene;
}

void add_regions(SvgScene& scene, const RegionAtlas& atlas) {
  if (atlas.classes().c() == 1) return;
  const Viewport& vp = scene.viewport;
  const double span = std::hypot(vp.xmax - vp.xmin, vp.ymax - vp.ymin);
  const double cx = (vp.xmin + vp.xmax) / 2, cy = (vp.ymin + vp.ymax) / 2;
  int k = 0;
  for (const RegionIndex& r : atlas.regions()) {
    const RegionHull& h = atlas.hull(r);
    std::vector<SvgPoint> pts;
    double reach = span;
    for (const Point& v : h.vertices) {
      const SvgPoint p = to_svg(v);
      pts.push_back(p);
      reach = std::max(reach, std::hypot(p.x - cx, p.y - cy) + span);
    }
    if (!h.bounded() && !pts.empty()) {
      // stretch the rays far past the viewport; the clip path trims them
      auto far = [&](const SvgPoint& from, const Vec2& d, double sgn) {
        const double dx = d.dx.get_d(), dy = d.dy.get_d(), len = std::hypot(dx, dy);
        return SvgPoint{from.x + sgn * 4 * reach * dx / len, from.y + sgn * 4 * reach * dy / len};
      };
      const SvgPoint first = far(pts.front(), h.recession[0], -1);
      const SvgPoint last = far(pts.back(), h.recession[1], 1);
      pts.insert(pts.begin(), first);
      pts.push_back(last);
    }
    const std::string cls = std::string(h.degenerate ? "thin" : "region") + std::to_string(k % kPaletteSize);
    if (!scene.style.count(cls)) {
      scene.style[cls] = h.degenerate ? std::string("fill:none;stroke-opacity:0.5;stroke:") + kPalette[k % kPaletteSize]
                                      : std::string("fill-opacity:0.25;stroke:none;fill:") + kPalette[k % kPaletteSize];
    }
    scene.regions.push_back({cls, "R" + std::to_string(r.a) + "," + std::to_string(r.b), std::move(pts)});
    ++k;
  }
}

void add_tree(SvgScene& scene, const LineSet& ls, const Tree& t, const Assignment& asg, const Embedding& emb) {
  for (const auto& [p, c] : t.edges()) {
    scene.edges.push_back({"edge", "e" + std::to_string(p) + "-" + std::to_string(c),
                           {to_svg(emb.point(ls, asg, p)), to_svg(emb.point(ls, asg, c))}});
  }
  for (int v = 0; v < t.n(); ++v) {
    scene.vertices.push_back({"vertex",
                              "v" + std::to_string(v) + " on l" + std::to_string(asg.line_of[static_cast<std::size_t>(v)]),
                              {to_svg(emb.point(ls, asg, v))}});
  }
}

void add_door(SvgScene& scene, const std::vector<Point>& door) {
  SvgItem item{"door", "door", {}};
  for (const Point& p : door) item.pts.push_back(to_svg(p));
  scene.doors.push_back(std::move(item));
}

std::string render_svg(const SvgScene& s) {
  if (s.regions.empty() && s.lines.empty() && s.doors.empty() && s.edges.empty() && s.crossings.empty() &&
      s.vertices.empty()) {
    throw Error(Errc::EmptyScene, "nothing to draw");
  }
  const Viewport& vp = s.viewport;
  const double w = vp.xmax - vp.xmin, h = vp.ymax - vp.ymin;
  const double unit = std::max(w, h);
  const double px_w = 800, px_h = std::clamp(800 * h / w, 200.0, 1600.0);
  const std::string stroke = num(unit * 0.002), radius = num(unit * 0.005);

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + num(px_w) + "\" height=\"" +
         num(px_h) + "\" viewBox=\"" + num(vp.xmin) + " " + num(-vp.ymax) + " " + num(w) + " " + num(h) +
         "\">\n";
  out += "<style type=\"text/css\">\n";
  for (const auto& [cls, css] : s.style) out += "." + cls + "{" + css + "}\n";
  out += "</style>\n";
  out += "<defs><clipPath id=\"view\"><rect x=\"" + num(vp.xmin) + "\" y=\"" + num(-vp.ymax) + "\" width=\"" + num(w) +
         "\" height=\"" + num(h) + "\"/></clipPath></defs>\n";
  out += "<g clip-path=\"url(#view)\" stroke-width=\"" + stroke + "\">\n";

  auto title = [](const SvgItem& it) {
    return it.title.empty() ? std::string() : "<title>" + escape(it.title) + "</title>";
  };
  auto poly = [&](const char* layer, const std::vector<SvgItem>& items) {
    out += std::string("<g id=\"") + layer + "\">\n";
    for (const SvgItem& it : items) {
      const bool closed = it.pts.size() > 2 && (it.cls.rfind("region", 0) == 0 || it.cls == "door");
      out += std::string(closed ? "<polygon" : "<polyline") + " class=\"" + it.cls + "\" points=\"" +
             points_attr(it.pts) + "\">" + title(it) + (closed ? "</polygon>\n" : "</polyline>\n");
    }
    out += "</g>\n";
  };
  auto dots = [&](const char* layer, const std::vector<SvgItem>& items) {
    out += std::string("<g id=\"") + layer + "\">\n";
    for (const SvgItem& it : items) {
      for (const SvgPoint& p : it.pts) {
        out += "<circle class=\"" + it.cls + "\" cx=\"" + num(p.x) + "\" cy=\"" + num(-p.y) + "\" r=\"" + radius +
               "\">" + title(it) + "</circle>\n";
      }
    }
    out += "</g>\n";
  };
  poly("regions", s.regions);
  poly("lines", s.lines);
  poly("doors", s.doors);
  poly("edges", s.edges);
  dots("crossings", s.crossings);
  dots("vertices", s.vertices);
  out += "</g>\n</svg>\n";
  return out;
}

}  // namespace treelines
