#include "treelines/lineset.hpp"

#include <algorithm>
#include <numeric>

namespace treelines {

LineSet LineSet::subset(std::span<const int> ids) const {
  std::vector<Line> picked;
  picked.reserve(ids.size());
  for (int id : ids) {
    Line l = line(id);
    l.id = id;
    picked.push_back(std::move(l));
  }
  return verify_general_position(std::move(picked));
}

LineSet verify_general_position(std::vector<Line> lines) {
  std::stable_sort(lines.begin(), lines.end(), [](const Line& a, const Line& b) { return a.slope < b.slope; });

  for (std::size_t i = 0; i + 1 < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size() && lines[j].slope == lines[i].slope; ++j) {
      if (lines[i].dual_offset == lines[j].dual_offset) {
        throw Error(Errc::DuplicateLine, "duplicate line", {lines[i].id, lines[j].id});
      }
      throw Error(Errc::ParallelPair, "parallel lines", {lines[i].id, lines[j].id});
    }
  }

  const std::size_t n = lines.size();
  std::vector<std::pair<Scalar, std::size_t>> xs;
  for (std::size_t i = 0; i < n; ++i) {
    xs.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != i) xs.emplace_back(crossing_x(lines[i], lines[j]), j);
    }
    std::sort(xs.begin(), xs.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) {
      if (xs[k].first == xs[k + 1].first) {
        std::vector<int> triple = {lines[i].id, lines[xs[k].second].id, lines[xs[k + 1].second].id};
        std::sort(triple.begin(), triple.end());
        throw Error(Errc::ConcurrentTriple, "three concurrent lines", triple);
      }
    }
  }

  LineSet ls;
  ls.labels_.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    ls.labels_.push_back(lines[i].id);
    lines[i].id = static_cast<int>(i + 1);
  }
  ls.lines_ = std::move(lines);
  return ls;
}

const char* to_string(CapCup kind) {
  switch (kind) {
    case CapCup::Cap: return "cap";
    case CapCup::Cup: return "cup";
    case CapCup::Neither: return "neither";
  }
  return "neither";
}

CapCup classify_cap_cup(const LineSet& ls) {
  const int n = static_cast<int>(ls.size());
  if (n < 3) throw Error(Errc::TooFew, "cap/cup classification needs at least three lines");
  bool cap = true;
  bool cup = true;
  for (int i = 1; i <= n && (cap || cup); ++i) {
    std::optional<Scalar> prev;
    for (int j = 1; j <= n; ++j) {
      if (j == i) continue;
      Scalar x = crossing_x(ls.line(i), ls.line(j));
      if (prev) {
        if (x < *prev) cap = false;
        if (x > *prev) cup = false;
      }
      prev = std::move(x);
    }
  }
  if (cap) return CapCup::Cap;
  if (cup) return CapCup::Cup;
  return CapCup::Neither;
}

CapCup classify_point_chain(std::span<const Point> points) {
  if (points.size() < 3) throw Error(Errc::TooFew, "chain classification needs at least three points");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    if (pts[i].x == pts[i + 1].x) throw Error(Errc::InvalidArgument, "chain points need distinct x");
  }
  bool convex = true;
  bool concave = true;
  for (std::size_t i = 0; i + 2 < pts.size(); ++i) {
    const int o = orientation(pts[i], pts[i + 1], pts[i + 2]);
    if (o <= 0) convex = false;
    if (o >= 0) concave = false;
  }
  if (convex) return CapCup::Cup;
  if (concave) return CapCup::Cap;
  return CapCup::Neither;
}

namespace {

// Longest chain of x-sorted points with strictly increasing consecutive
// slopes. best[i][j] is the longest such chain ending with the edge i -> j.
std::vector<int> longest_convex_chain(const std::vector<Point>& pts) {
  const std::size_t n = pts.size();
  std::vector<std::vector<Scalar>> slope(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slope[i][j] = (pts[j].y - pts[i].y) / (pts[j].x - pts[i].x);
  }
  std::vector<std::vector<int>> best(n, std::vector<int>(n, 2));
  std::vector<std::vector<int>> prev(n, std::vector<int>(n, -1));

  std::vector<std::size_t> in, out;
  for (std::size_t j = 1; j + 1 < n; ++j) {
    in.resize(j);
    std::iota(in.begin(), in.end(), std::size_t{0});
    std::sort(in.begin(), in.end(), [&](std::size_t a, std::size_t b) { return slope[a][j] < slope[b][j]; });
    out.resize(n - j - 1);
    std::iota(out.begin(), out.end(), j + 1);
    std::sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return slope[j][a] < slope[j][b]; });

    std::size_t p = 0;
    int run_best = 0;
    int run_arg = -1;
    for (std::size_t k : out) {
      while (p < in.size() && slope[in[p]][j] < slope[j][k]) {
        const std::size_t i = in[p++];
        if (best[i][j] > run_best || (best[i][j] == run_best && static_cast<int>(i) < run_arg)) {
          run_best = best[i][j];
          run_arg = static_cast<int>(i);
        }
      }
      if (run_arg >= 0 && run_best + 1 > best[j][k]) {
        best[j][k] = run_best + 1;
        prev[j][k] = run_arg;
      }
    }
  }

  if (n < 2) return std::vector<int>(n, 0);
  std::size_t bi = 0, bj = 1;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (best[i][j] > best[bi][bj]) bi = i, bj = j;
    }
  }
  std::vector<int> chain = {static_cast<int>(bj), static_cast<int>(bi)};
  for (int a = static_cast<int>(bi), b = static_cast<int>(bj); prev[a][b] >= 0;) {
    const int c = prev[a][b];
    chain.push_back(c);
    b = a;
    a = c;
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

}  // namespace

CapCupSubset longest_cap_cup(const LineSet& ls) {
  const int n = static_cast<int>(ls.size());
  if (n < 3) throw Error(Errc::TooFew, "cap/cup extraction needs at least three lines");
  std::vector<Point> convex_pts, concave_pts;
  for (const Line& l : ls.lines()) {
    convex_pts.push_back({l.slope, l.dual_offset});
    concave_pts.push_back({l.slope, -l.dual_offset});
  }
  // Dual points sorted by slope already, so chain positions map to ids.
  std::vector<int> cap_chain = longest_convex_chain(convex_pts);
  std::vector<int> cup_chain = longest_convex_chain(concave_pts);

  CapCupSubset out;
  const bool take_cap = cap_chain.size() >= cup_chain.size();
  out.kind = take_cap ? CapCup::Cap : CapCup::Cup;
  for (int idx : take_cap ? cap_chain : cup_chain) out.ids.push_back(idx + 1);
  out.lines = ls.subset(out.ids);
  return out;
}

int erdos_szekeres_bound(long long n) {
  if (n < 2) throw Error(Errc::TooFew, "bound defined for n >= 2");
  int k = 2;
  while (true) {
    mpz_class threshold;
    mpz_bin_uiui(threshold.get_mpz_t(), static_cast<unsigned long>(2 * (k + 1) - 4), static_cast<unsigned long>(k - 1));
    threshold += 1;
    if (threshold > mpz_class(std::to_string(n))) return k;
    ++k;
  }
}

std::vector<Crossing> intersection_order(const LineSet& ls, int id) {
  const Line& l = ls.line(id);
  std::vector<Crossing> out;
  out.reserve(ls.size() - 1);
  for (const Line& other : ls.lines()) {
    if (other.id == id) continue;
    out.push_back({other.id, l.point_at(crossing_x(l, other))});
  }
  std::sort(out.begin(), out.end(), [](const Crossing& a, const Crossing& b) { return a.at.x < b.at.x; });
  return out;
}

ColorClasses::ColorClasses(int n, int c) : n_(n), c_(c) {
  if (c < 1 || n < 1 || n % c != 0) {
    throw Error(Errc::DivisibilityError, "number of classes must divide the number of lines", {n, c});
  }
}

int ColorClasses::class_of(int line_id) const {
  if (line_id < 1 || line_id > n_) throw Error(Errc::InvalidArgument, "line id out of range", {line_id});
  return (line_id - 1) / class_size() + 1;
}

namespace {

Vec2 rot90(const Vec2& v) { return {-v.dy, v.dx}; }
Vec2 rotm90(const Vec2& v) { return {v.dy, -v.dx}; }
Vec2 neg(const Vec2& v) { return {-v.dx, -v.dy}; }

}  // namespace

bool RegionHull::contains(const Point& p) const {
  if (degenerate) {
    // Lower-dimensional: the closed segment or ray spanned by the data.
    if (vertices.size() == 1) {
      if (recession.empty()) return p == vertices[0];
      const Vec2 d = recession[1];
      const Vec2 rel = p - vertices[0];
      return cross(d, rel) == 0 && dot(d, rel) >= 0;
    }
    return on_segment(p, Segment(vertices[0], vertices[1]));
  }
  return std::all_of(sides.begin(), sides.end(),
                     [&](const HullSide& s) { return cross(s.direction, p - s.anchor) >= 0; });
}

RegionAtlas::RegionAtlas(LineSet ls, ColorClasses cc) : ls_(std::move(ls)), cc_(cc) {
  if (static_cast<int>(ls_.size()) != cc_.n()) {
    throw Error(Errc::SizeMismatch, "color classes sized for a different line set");
  }
  crossings_.reserve(ls_.size());
  for (int id = 1; id <= static_cast<int>(ls_.size()); ++id) crossings_.push_back(intersection_order(ls_, id));
  if (cc_.c() >= 2) {
    for (RegionIndex r : regions()) hulls_.push_back(build_hull(r));
  }
}

std::vector<RegionIndex> RegionAtlas::regions() const {
  std::vector<RegionIndex> out;
  for (int a = 1; a <= cc_.c(); ++a) {
    for (int b = a; b <= cc_.c(); ++b) out.push_back({a, b});
  }
  return out;
}

std::size_t RegionAtlas::slot(RegionIndex r) const {
  const int c = cc_.c();
  if (r.a < 1 || r.a > r.b || r.b > c) throw Error(Errc::EmptyRegion, "no such region", {r.a, r.b});
  // Row-major over a <= b.
  const int before = (r.a - 1) * c - (r.a - 1) * (r.a - 2) / 2;
  return static_cast<std::size_t>(before + (r.b - r.a));
}

int RegionAtlas::segment_of(int line_id, const Scalar& x) const {
  const auto& xs = crossings(line_id);
  auto it = std::lower_bound(xs.begin(), xs.end(), x, [](const Crossing& c, const Scalar& v) { return c.at.x < v; });
  if (it != xs.end() && it->at.x == x) {
    throw Error(Errc::OnIntersection, "point is a crossing of two lines", {line_id, it->partner});
  }
  const int below = static_cast<int>(it - xs.begin());
  return below / cc_.class_size() + 1;
}

RegionIndex RegionAtlas::region_of(int line_id, const Scalar& x) const {
  const int seg = segment_of(line_id, x);
  const int cls = cc_.class_of(line_id);
  return {std::min(seg, cls), std::max(seg, cls)};
}

const RegionHull& RegionAtlas::hull(RegionIndex r) const {
  if (cc_.c() < 2) throw Error(Errc::InvalidArgument, "with one class the region is the whole plane");
  return hulls_.at(slot(r));
}

int RegionAtlas::line_through(const Point& p) const {
  int found = 0;
  for (const Line& l : ls_.lines()) {
    if (!l.contains(p)) continue;
    if (found) throw Error(Errc::OnIntersection, "point is a crossing of two lines", {found, l.id});
    found = l.id;
  }
  return found;
}

RegionHull RegionAtlas::build_hull(RegionIndex r) const {
  const int k = cc_.class_size();
  const int c = cc_.c();
  std::vector<Point> finite;
  std::vector<Vec2> dirs;

  auto add_piece = [&](int line_id, int seg) {
    const Line& l = ls_.line(line_id);
    const auto& xs = crossings(line_id);
    if (seg == 1) dirs.push_back({Scalar(-1), -l.slope});
    else finite.push_back(xs[static_cast<std::size_t>((seg - 1) * k - 1)].at);
    if (seg == c) dirs.push_back({Scalar(1), l.slope});
    else finite.push_back(xs[static_cast<std::size_t>(seg * k - 1)].at);
  };
  for (int id = cc_.first_id(r.b); id <= cc_.last_id(r.b); ++id) add_piece(id, r.a);
  if (r.a != r.b) {
    for (int id = cc_.first_id(r.a); id <= cc_.last_id(r.a); ++id) add_piece(id, r.b);
  }

  RegionHull hull;
  hull.region = r;
  std::vector<Point> poly = convex_hull(finite);

  if (dirs.empty()) {
    hull.vertices = poly;
    if (poly.size() < 3) {
      hull.degenerate = true;
      if (poly.size() == 1) return hull;
      hull.sides.push_back({SideKind::Segment, 1, poly[0], poly[1] - poly[0]});
      hull.sides.push_back({SideKind::Segment, 2, poly[1], poly[0] - poly[1]});
      return hull;
    }
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const Point& a = poly[i];
      const Point& b = poly[(i + 1) % poly.size()];
      hull.sides.push_back({SideKind::Segment, static_cast<int>(i + 1), a, b - a});
    }
    return hull;
  }

  // Extreme directions of the recession cone: every other direction is
  // clockwise of `ccw_most` and counter-clockwise of `cw_most`.
  auto pick = [&](bool ccw) -> const Vec2& {
    for (const Vec2& d : dirs) {
      bool extreme = std::all_of(dirs.begin(), dirs.end(), [&](const Vec2& e) {
        const int s = sgn(cross(d, e));
        if (s == 0) return dot(d, e) > 0;
        return ccw ? s < 0 : s > 0;
      });
      if (extreme) return d;
    }
    throw Error(Errc::InvalidArgument, "region recession cone is not pointed", {r.a, r.b});
  };
  const Vec2 d_in = pick(true);    // boundary arrives along this ray (travelled backwards)
  const Vec2 d_out = pick(false);  // boundary leaves along this ray

  auto extreme_vertex = [&](const Vec2& normal, const Vec2& along) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < poly.size(); ++i) {
      const int c1 = cmp(dot(normal, poly[i] - poly[best]), 0);
      if (c1 > 0 || (c1 == 0 && dot(along, poly[i] - poly[best]) < 0)) best = i;
    }
    return best;
  };
  const std::size_t start = extreme_vertex(rot90(d_in), d_in);
  const std::size_t end = extreme_vertex(rotm90(d_out), d_out);

  for (std::size_t i = start;; i = (i + 1) % poly.size()) {
    hull.vertices.push_back(poly[i]);
    if (i == end) break;
  }
  hull.recession = {d_in, d_out};

  // Lower-dimensional when everything sits on one line: a single vertex with
  // parallel rays, or a collinear chain whose rays run along it.
  bool flat = cross(d_in, d_out) == 0 && dot(d_in, d_out) > 0;
  if (flat && hull.vertices.size() > 1) flat = cross(d_in, hull.vertices.back() - hull.vertices.front()) == 0;
  if (flat && hull.vertices.size() == 1) {
    hull.degenerate = true;
    return hull;
  }

  std::vector<HullSide> sides;
  sides.push_back({SideKind::RayIn, 0, hull.vertices.front(), neg(d_in)});
  for (std::size_t i = 0; i + 1 < hull.vertices.size(); ++i) {
    sides.push_back({SideKind::Segment, 0, hull.vertices[i], hull.vertices[i + 1] - hull.vertices[i]});
  }
  sides.push_back({SideKind::RayOut, 0, hull.vertices.back(), d_out});

  const std::size_t lex_min = static_cast<std::size_t>(
      std::min_element(hull.vertices.begin(), hull.vertices.end(), lex_less) - hull.vertices.begin());
  const std::size_t first = lex_min + 1;  // the side leaving the smallest vertex
  for (std::size_t t = 0; t < sides.size(); ++t) {
    HullSide s = sides[(first + t) % sides.size()];
    s.label = static_cast<int>(t + 1);
    hull.sides.push_back(std::move(s));
  }
  return hull;
}

RegionIndex region_of(const LineSet& ls, const ColorClasses& cc, int line_id, const Scalar& x) {
  if (static_cast<int>(ls.size()) != cc.n()) throw Error(Errc::SizeMismatch, "color classes sized for a different line set");
  std::vector<Scalar> xs;
  const Line& l = ls.line(line_id);
  for (const Line& other : ls.lines()) {
    if (other.id == line_id) continue;
    Scalar cx = crossing_x(l, other);
    if (cx == x) throw Error(Errc::OnIntersection, "point is a crossing of two lines", {line_id, other.id});
    xs.push_back(std::move(cx));
  }
  const int below = static_cast<int>(std::count_if(xs.begin(), xs.end(), [&](const Scalar& v) { return v < x; }));
  const int seg = below / cc.class_size() + 1;
  const int cls = cc.class_of(line_id);
  return {std::min(seg, cls), std::max(seg, cls)};
}

RegionHull region_hull(const LineSet& ls, const ColorClasses& cc, RegionIndex r) {
  return RegionAtlas(ls, cc).hull(r);
}

}  // namespace treelines
