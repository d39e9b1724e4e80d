#pragma once

// Exact rational geometry kernel. Every coordinate, slope and offset is a GMP
// rational; no predicate in this header rounds.

#include <compare>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "treelines/error.hpp"

namespace treelines {

using Scalar = mpq_class;

/// Parses `p/q` or an integer, with optional leading sign. Throws Errc::Syntax.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& value);
int sign(const Scalar& value);

struct Point {
  Scalar x;
  Scalar y;

  friend bool operator==(const Point&, const Point&) = default;
};

bool lex_less(const Point& a, const Point& b);

struct Vec2 {
  Scalar dx;
  Scalar dy;

  friend bool operator==(const Vec2&, const Vec2&) = default;
};

Vec2 operator-(const Point& a, const Point& b);
Point operator+(const Point& p, const Vec2& v);
Scalar cross(const Vec2& a, const Vec2& b);
Scalar dot(const Vec2& a, const Vec2& b);

/// Non-vertical line y = slope * x - dual_offset. The offset is the negated
/// y-intercept, so the dual point of a line is (slope, dual_offset).
struct Line {
  Scalar slope;
  Scalar dual_offset;
  int id = 0;

  Scalar y_at(const Scalar& x) const { return slope * x - dual_offset; }
  Point point_at(const Scalar& x) const { return {x, y_at(x)}; }
  Vec2 direction() const { return {Scalar(1), slope}; }
  bool contains(const Point& p) const { return p.y == y_at(p.x); }
};

struct Segment {
  Point p;
  Point q;

  Segment() = default;
  /// Throws Errc::InvalidArgument when p == q.
  Segment(Point p, Point q);

  Segment reversed() const { return Segment(q, p); }
};

struct Ray {
  Point origin;
  Vec2 direction;

  Ray() = default;
  /// Throws Errc::InvalidArgument on a zero direction.
  Ray(Point origin, Vec2 direction);
};

/// +1 left turn, 0 collinear, -1 right turn.
int orientation(const Point& p, const Point& q, const Point& r);

/// Throws Errc::ParallelLines when the slopes are equal.
Point line_intersection(const Line& l1, const Line& l2);

/// x-coordinate of the crossing of two lines; cheaper than the full point.
Scalar crossing_x(const Line& l1, const Line& l2);

enum class Contact {
  Disjoint,
  ProperCross,
  TouchEndpoints,  // an endpoint of one coincides with an endpoint of the other
  TouchInterior,   // an endpoint of one lies in the relative interior of the other
  Overlap,         // collinear, sharing more than one point
};

struct SegmentIntersection {
  Contact kind = Contact::Disjoint;
  std::optional<Point> at;  // set for ProperCross and both Touch kinds
};

SegmentIntersection segments_intersect(const Segment& s1, const Segment& s2);

/// True when p lies on the closed segment s.
bool on_segment(const Point& p, const Segment& s);
/// True when p lies on s and is neither endpoint.
bool in_relative_interior(const Point& p, const Segment& s);

Point dualize_line(const Line& l);
Line dualize_point(const Point& p, int id = 0);

/// Counter-clockwise hull starting at the lexicographically smallest point,
/// collinear points dropped. Throws Errc::InvalidArgument on empty input.
std::vector<Point> convex_hull(std::span<const Point> points);

/// Closed convex polygon membership; `hull` as returned by convex_hull.
bool in_convex_polygon(const Point& p, std::span<const Point> hull);

/// Signed crossing count of the oriented polyline with the ray: +1 for each
/// arrival from the left of the ray (looking along it), -1 from the right.
/// Throws Errc::DegenerateContact when a vertex or a collinear piece of the
/// polyline lies on the ray, or the polyline passes through its origin.
int winding_number(std::span<const Point> polyline, const Ray& ray);

enum class GapClass { Acute, Right, Obtuse };

/// The angle a(hi) - a(lo) between two lines, a = arctan(slope), kept as
/// its class and tangent. Tangent is meaningful for Acute and Obtuse only.
struct AngleGap {
  GapClass cls = GapClass::Acute;
  Scalar tangent;
};

/// Orders the pair by slope first; throws Errc::InvalidArgument on equal slopes.
AngleGap angle_gap(const Line& a, const Line& b);
std::strong_ordering compare_angle_gap(const AngleGap& g1, const AngleGap& g2);
std::strong_ordering compare_angle_gap(std::pair<const Line&, const Line&> pair1,
                                       std::pair<const Line&, const Line&> pair2);

}  // namespace treelines
