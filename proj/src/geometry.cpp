#include "treelines/geometry.hpp"

#include <algorithm>
#include <cctype>

namespace treelines {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::ParallelLines: return "ParallelLines";
    case Errc::DegenerateContact: return "DegenerateContact";
    case Errc::ParallelPair: return "ParallelPair";
    case Errc::ConcurrentTriple: return "ConcurrentTriple";
    case Errc::DuplicateLine: return "DuplicateLine";
    case Errc::TooFew: return "TooFew";
    case Errc::OnIntersection: return "OnIntersection";
    case Errc::EmptyRegion: return "EmptyRegion";
    case Errc::ChainTooShort: return "ChainTooShort";
    case Errc::SpanTooWide: return "SpanTooWide";
    case Errc::NotDoubling: return "NotDoubling";
    case Errc::NotCapOrCup: return "NotCapOrCup";
    case Errc::DivisibilityError: return "DivisibilityError";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::NotAPath: return "NotAPath";
    case Errc::NonUniform: return "NonUniform";
    case Errc::TooLarge: return "TooLarge";
    case Errc::Syntax: return "Syntax";
    case Errc::Validation: return "Validation";
    case Errc::EmptyScene: return "EmptyScene";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw Error(Errc::Syntax, "malformed rational '" + std::string(text) + "'");
  }
  mpz_class n(std::string(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw Error(Errc::Syntax, "zero denominator in '" + std::string(text) + "'");
  Scalar q(negative ? mpz_class(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

int sign(const Scalar& value) { return sgn(value); }

bool lex_less(const Point& a, const Point& b) {
  if (a.x != b.x) return a.x < b.x;
  return a.y < b.y;
}

Vec2 operator-(const Point& a, const Point& b) { return {a.x - b.x, a.y - b.y}; }
Point operator+(const Point& p, const Vec2& v) { return {p.x + v.dx, p.y + v.dy}; }
Scalar cross(const Vec2& a, const Vec2& b) { return a.dx * b.dy - a.dy * b.dx; }
Scalar dot(const Vec2& a, const Vec2& b) { return a.dx * b.dx + a.dy * b.dy; }

Segment::Segment(Point p_, Point q_) : p(std::move(p_)), q(std::move(q_)) {
  if (p == q) throw Error(Errc::InvalidArgument, "segment endpoints coincide");
}

Ray::Ray(Point origin_, Vec2 direction_) : origin(std::move(origin_)), direction(std::move(direction_)) {
  if (direction.dx == 0 && direction.dy == 0) throw Error(Errc::InvalidArgument, "ray has zero direction");
}

int orientation(const Point& p, const Point& q, const Point& r) { return sgn(cross(q - p, r - p)); }

Scalar crossing_x(const Line& l1, const Line& l2) {
  if (l1.slope == l2.slope) {
    throw Error(Errc::ParallelLines, "lines have equal slope", {l1.id, l2.id});
  }
  return (l1.dual_offset - l2.dual_offset) / (l1.slope - l2.slope);
}

Point line_intersection(const Line& l1, const Line& l2) { return l1.point_at(crossing_x(l1, l2)); }

bool on_segment(const Point& p, const Segment& s) {
  if (orientation(s.p, s.q, p) != 0) return false;
  return std::min(s.p.x, s.q.x) <= p.x && p.x <= std::max(s.p.x, s.q.x) &&
         std::min(s.p.y, s.q.y) <= p.y && p.y <= std::max(s.p.y, s.q.y);
}

bool in_relative_interior(const Point& p, const Segment& s) { return p != s.p && p != s.q && on_segment(p, s); }

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2) {
  const int o1 = orientation(s1.p, s1.q, s2.p);
  const int o2 = orientation(s1.p, s1.q, s2.q);
  const int o3 = orientation(s2.p, s2.q, s1.p);
  const int o4 = orientation(s2.p, s2.q, s1.q);

  if (o1 == 0 && o2 == 0) {
    // Collinear: compare the lexicographic extents along the common line.
    auto [a1, b1] = std::minmax(s1.p, s1.q, lex_less);
    auto [a2, b2] = std::minmax(s2.p, s2.q, lex_less);
    const Point& lo = lex_less(a1, a2) ? a2 : a1;
    const Point& hi = lex_less(b1, b2) ? b1 : b2;
    if (lex_less(hi, lo)) return {};
    if (lo == hi) return {Contact::TouchEndpoints, lo};
    return {Contact::Overlap, std::nullopt};
  }

  if (o1 * o2 < 0 && o3 * o4 < 0) {
    const Vec2 d1 = s1.q - s1.p;
    const Vec2 d2 = s2.q - s2.p;
    const Scalar t = cross(s2.p - s1.p, d2) / cross(d1, d2);
    return {Contact::ProperCross, Point{s1.p.x + t * d1.dx, s1.p.y + t * d1.dy}};
  }
  if (o1 * o2 > 0 || o3 * o4 > 0) return {};

  std::optional<Point> touch;
  if (o1 == 0 && on_segment(s2.p, s1)) touch = s2.p;
  else if (o2 == 0 && on_segment(s2.q, s1)) touch = s2.q;
  else if (o3 == 0 && on_segment(s1.p, s2)) touch = s1.p;
  else if (o4 == 0 && on_segment(s1.q, s2)) touch = s1.q;
  if (!touch) return {};

  const bool end1 = *touch == s1.p || *touch == s1.q;
  const bool end2 = *touch == s2.p || *touch == s2.q;
  return {end1 && end2 ? Contact::TouchEndpoints : Contact::TouchInterior, touch};
}

Point dualize_line(const Line& l) { return {l.slope, l.dual_offset}; }

Line dualize_point(const Point& p, int id) { return Line{p.x, p.y, id}; }

std::vector<Point> convex_hull(std::span<const Point> points) {
  if (points.empty()) throw Error(Errc::InvalidArgument, "convex hull of an empty set");
  std::vector<Point> pts(points.begin(), points.end());
  std::sort(pts.begin(), pts.end(), lex_less);
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() < 3) return pts;

  std::vector<Point> hull(2 * pts.size());
  std::size_t k = 0;
  for (const auto& p : pts) {
    while (k >= 2 && orientation(hull[k - 2], hull[k - 1], p) <= 0) --k;
    hull[k++] = p;
  }
  for (std::size_t i = pts.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orientation(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

bool in_convex_polygon(const Point& p, std::span<const Point> hull) {
  if (hull.empty()) return false;
  if (hull.size() == 1) return p == hull[0];
  if (hull.size() == 2) return on_segment(p, Segment(hull[0], hull[1]));
  for (std::size_t i = 0; i < hull.size(); ++i) {
    if (orientation(hull[i], hull[(i + 1) % hull.size()], p) < 0) return false;
  }
  return true;
}

int winding_number(std::span<const Point> polyline, const Ray& ray) {
  if (polyline.size() < 2) throw Error(Errc::InvalidArgument, "polyline needs at least two points");
  const Vec2& d = ray.direction;
  std::vector<Scalar> side(polyline.size());
  std::vector<Scalar> along(polyline.size());
  for (std::size_t i = 0; i < polyline.size(); ++i) {
    const Vec2 rel = polyline[i] - ray.origin;
    side[i] = cross(d, rel);
    along[i] = dot(rel, d);
    if (side[i] == 0 && along[i] >= 0) {
      throw Error(Errc::DegenerateContact, "polyline vertex lies on the ray", {static_cast<int>(i)});
    }
  }

  int winding = 0;
  for (std::size_t i = 0; i + 1 < polyline.size(); ++i) {
    const int sa = sgn(side[i]);
    const int sb = sgn(side[i + 1]);
    if (sa * sb >= 0) continue;
    const Scalar u = side[i] / (side[i] - side[i + 1]);
    const Scalar t = along[i] + u * (along[i + 1] - along[i]);
    if (t == 0) throw Error(Errc::DegenerateContact, "polyline passes through the ray origin", {static_cast<int>(i)});
    if (t > 0) winding += sa > 0 ? 1 : -1;
  }
  return winding;
}

AngleGap angle_gap(const Line& a, const Line& b) {
  if (a.slope == b.slope) throw Error(Errc::InvalidArgument, "angle gap of parallel lines", {a.id, b.id});
  const Line& lo = a.slope < b.slope ? a : b;
  const Line& hi = a.slope < b.slope ? b : a;
  const Scalar denom = 1 + lo.slope * hi.slope;
  const int s = sgn(denom);
  if (s == 0) return {GapClass::Right, Scalar(0)};
  return {s > 0 ? GapClass::Acute : GapClass::Obtuse, Scalar((hi.slope - lo.slope) / denom)};
}

std::strong_ordering compare_angle_gap(const AngleGap& g1, const AngleGap& g2) {
  if (g1.cls != g2.cls) return static_cast<int>(g1.cls) <=> static_cast<int>(g2.cls);
  if (g1.cls == GapClass::Right) return std::strong_ordering::equal;
  const int c = cmp(g1.tangent, g2.tangent);
  return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

std::strong_ordering compare_angle_gap(std::pair<const Line&, const Line&> pair1,
                                       std::pair<const Line&, const Line&> pair2) {
  return compare_angle_gap(angle_gap(pair1.first, pair1.second), angle_gap(pair2.first, pair2.second));
}

}  // namespace treelines
