#pragma once

#include <span>
#include <vector>

#include "treelines/geometry.hpp"

namespace treelines {

/// Lines in general position, indexed 1..n by strictly increasing slope.
class LineSet {
 public:
  LineSet() = default;

  std::size_t size() const noexcept { return lines_.size(); }
  /// 1-based id in slope order.
  const Line& line(int id) const { return lines_.at(static_cast<std::size_t>(id - 1)); }
  std::span<const Line> lines() const noexcept { return lines_; }
  /// The `id` the caller attached to this line before validation.
  int input_label(int id) const { return labels_.at(static_cast<std::size_t>(id - 1)); }

  /// Restriction to the given ids (any order), re-indexed 1..k by slope.
  /// Input labels of the result are the ids in *this.
  LineSet subset(std::span<const int> ids) const;

  friend LineSet verify_general_position(std::vector<Line> lines);

 private:
  std::vector<Line> lines_;
  std::vector<int> labels_;
};

/// Sorts by slope and assigns ids 1..n. Errors name the offending input ids:
/// DuplicateLine(i,j), ParallelPair(i,j), ConcurrentTriple(i,j,k).
LineSet verify_general_position(std::vector<Line> lines);

enum class CapCup { Cap, Cup, Neither };
const char* to_string(CapCup kind);

/// Cap: along every line the crossings with the other lines appear in
/// increasing x in index order. Cup: in decreasing x. Caps are exactly the
/// sets whose dual points form a convex (cup) chain. Throws TooFew for n < 3.
CapCup classify_cap_cup(const LineSet& ls);

/// Point-set side of the duality: Cup if the x-sorted points form a strictly
/// convex chain, Cap if strictly concave. Requires distinct x.
CapCup classify_point_chain(std::span<const Point> points);

struct CapCupSubset {
  CapCup kind = CapCup::Neither;
  std::vector<int> ids;  // increasing
  LineSet lines;
};

/// Largest subset forming a cap or a cup (ties prefer Cap, then the
/// lexicographically smallest id sequence among optimal chains found).
CapCupSubset longest_cap_cup(const LineSet& ls);

/// Erdos-Szekeres guarantee max{k : C(2k-4, k-2) + 1 <= n} for n >= 2.
int erdos_szekeres_bound(long long n);

struct Crossing {
  int partner = 0;
  Point at;
};

/// The n-1 crossings on line `id`, sorted by x ascending.
std::vector<Crossing> intersection_order(const LineSet& ls, int id);

class ColorClasses {
 public:
  /// Throws DivisibilityError unless c >= 1 and c divides n.
  ColorClasses(int n, int c);

  int n() const noexcept { return n_; }
  int c() const noexcept { return c_; }
  int class_size() const noexcept { return n_ / c_; }
  int class_of(int line_id) const;
  int first_id(int cls) const { return (cls - 1) * class_size() + 1; }
  int last_id(int cls) const { return cls * class_size(); }

 private:
  int n_;
  int c_;
};

struct RegionIndex {
  int a = 0;
  int b = 0;

  friend bool operator==(const RegionIndex&, const RegionIndex&) = default;
  friend auto operator<=>(const RegionIndex&, const RegionIndex&) = default;
};

enum class SideKind { Segment, RayIn, RayOut };

/// One side of a region hull, traversed counter-clockwise: the hull lies to
/// the left of `direction` through `anchor`. Segment sides run from anchor
/// to anchor + direction; RayIn arrives at anchor from infinity; RayOut
/// leaves anchor towards infinity.
struct HullSide {
  SideKind kind = SideKind::Segment;
  int label = 0;  // 1-based, counter-clockwise from the lexicographically smallest vertex
  Point anchor;
  Vec2 direction;
};

struct RegionHull {
  RegionIndex region;
  std::vector<Point> vertices;    // finite boundary vertices, CCW
  std::vector<Vec2> recession;    // empty when bounded, else {incoming ray dir, outgoing ray dir}
  std::vector<HullSide> sides;    // sorted by label
  bool degenerate = false;        // lower-dimensional hull (a single segment or ray)

  bool bounded() const noexcept { return recession.empty(); }
  std::size_t side_count() const noexcept { return sides.size(); }
  /// Closed membership.
  bool contains(const Point& p) const;
};

/// Sorted crossings of every line plus all region hulls, computed once.
/// Immutable after construction.
class RegionAtlas {
 public:
  RegionAtlas(LineSet ls, ColorClasses cc);

  const LineSet& lines() const noexcept { return ls_; }
  const ColorClasses& classes() const noexcept { return cc_; }
  const std::vector<Crossing>& crossings(int line_id) const { return crossings_.at(static_cast<std::size_t>(line_id - 1)); }

  /// Region of the point (x, l_id(x)). Throws OnIntersection on a crossing.
  RegionIndex region_of(int line_id, const Scalar& x) const;
  /// Index of the open segment l_{id,c'} that contains x.
  int segment_of(int line_id, const Scalar& x) const;
  /// Throws EmptyRegion for indices outside 1 <= a <= b <= c and
  /// InvalidArgument when c == 1 (the single region is the whole plane).
  const RegionHull& hull(RegionIndex r) const;
  std::vector<RegionIndex> regions() const;

  /// The line containing p, or 0 when p lies on no line; throws
  /// OnIntersection when p lies on two.
  int line_through(const Point& p) const;

 private:
  RegionHull build_hull(RegionIndex r) const;
  std::size_t slot(RegionIndex r) const;

  LineSet ls_;
  ColorClasses cc_;
  std::vector<std::vector<Crossing>> crossings_;
  std::vector<RegionHull> hulls_;  // every a <= b, built eagerly; empty when c == 1
};

RegionIndex region_of(const LineSet& ls, const ColorClasses& cc, int line_id, const Scalar& x);
RegionHull region_hull(const LineSet& ls, const ColorClasses& cc, RegionIndex r);

}  // namespace treelines
