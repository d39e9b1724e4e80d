#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "treelines/lineset.hpp"

using namespace treelines;

namespace {

Scalar Q(long p, long q = 1) {
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

LineSet make(std::initializer_list<std::pair<Scalar, Scalar>> rows) {
  std::vector<Line> lines;
  int id = 1;
  for (const auto& [s, b] : rows) lines.push_back({s, b, id++});
  return verify_general_position(std::move(lines));
}

std::vector<std::pair<Scalar, Scalar>> rows_of(const LineSet& ls) {
  std::vector<std::pair<Scalar, Scalar>> out;
  for (const Line& l : ls.lines()) out.emplace_back(l.slope, l.dual_offset);
  return out;
}

int error_code(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return static_cast<int>(e.code());
  }
  return -1;
}

}  // namespace

TEST_CASE("verify_general_position") {
  // y = x, y = 2x - 1, y = 3x - 2 all pass through (1,1)
  CHECK(error_code([] { make({{Q(1), Q(0)}, {Q(2), Q(1)}, {Q(3), Q(2)}}); }) == static_cast<int>(Errc::ConcurrentTriple));
  CHECK(error_code([] { make({{Q(1), Q(0)}, {Q(1), Q(1)}}); }) == static_cast<int>(Errc::ParallelPair));
  CHECK(error_code([] { make({{Q(1), Q(0)}, {Q(1), Q(0)}}); }) == static_cast<int>(Errc::DuplicateLine));

  // y = 0, y = x, y = -x + 5
  LineSet ls = make({{Q(0), Q(0)}, {Q(1), Q(0)}, {Q(-1), Q(-5)}});
  CHECK(ls.line(1).slope == -1);
  CHECK(ls.input_label(1) == 3);
  CHECK(ls.input_label(2) == 1);
  CHECK(ls.input_label(3) == 2);
  for (int i = 1; i <= 3; ++i) CHECK(ls.line(i).id == i);

  try {
    make({{Q(0), Q(0)}, {Q(1), Q(0)}, {Q(2), Q(1)}, {Q(3), Q(2)}});
    FAIL("expected ConcurrentTriple");
  } catch (const Error& e) {
    CHECK(e.witness() == std::vector<int>{2, 3, 4});
  }
}

TEST_CASE("classify_cap_cup") {
  CHECK(error_code([] { classify_cap_cup(make({{Q(0), Q(0)}, {Q(1), Q(0)}})); }) == static_cast<int>(Errc::TooFew));
  // dual to (0,0), (1,1), (2,0): a concave point chain
  LineSet ls = make({{Q(0), Q(0)}, {Q(1), Q(1)}, {Q(2), Q(0)}});
  CHECK(classify_cap_cup(ls) == CapCup::Cup);
  CHECK(oracle::direct_cap_cup(rows_of(ls)) == -1);
  // dual to points on y = x^2
  LineSet cap = make({{Q(0), Q(0)}, {Q(1), Q(1)}, {Q(2), Q(4)}, {Q(3), Q(9)}});
  CHECK(classify_cap_cup(cap) == CapCup::Cap);
}

TEST_CASE("cap/cup duality on random sets") {
  std::mt19937_64 rng(101);
  int caps = 0, cups = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + trial % 10;
    LineSet ls = trial % 3 == 0 ? testsupport::random_cap(rng, n) : testsupport::random_lines(rng, n);
    if (trial % 3 == 1) {
      std::vector<Line> flipped;
      for (const Line& l : ls.lines()) flipped.push_back({l.slope, -l.dual_offset, l.id});
      ls = verify_general_position(flipped);
    }
    std::vector<Point> dual;
    for (const Line& l : ls.lines()) dual.push_back(dualize_line(l));
    const CapCup lines_kind = classify_cap_cup(ls);
    const CapCup points_kind = classify_point_chain(dual);
    const int direct = oracle::direct_cap_cup(rows_of(ls));
    CHECK(lines_kind == (direct == 1 ? CapCup::Cap : direct == -1 ? CapCup::Cup : CapCup::Neither));
    // a cap of lines is a cup of points and vice versa
    if (lines_kind == CapCup::Cap) CHECK(points_kind == CapCup::Cup);
    if (lines_kind == CapCup::Cup) CHECK(points_kind == CapCup::Cap);
    if (lines_kind == CapCup::Neither) CHECK(points_kind == CapCup::Neither);
    caps += lines_kind == CapCup::Cap;
    cups += lines_kind == CapCup::Cup;
  }
  CHECK(caps >= 100);
  CHECK(cups >= 1);
}

TEST_CASE("longest_cap_cup") {
  std::vector<Line> arc;
  for (long i = 1; i <= 8; ++i) arc.push_back({Q(i), Q(-i * i), static_cast<int>(i)});
  auto full = longest_cap_cup(verify_general_position(arc));
  CHECK(full.ids.size() == 8);
  CHECK(full.kind == CapCup::Cup);

  std::mt19937_64 rng(202);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 3 + trial % 8;
    LineSet ls = testsupport::random_lines(rng, n);
    auto found = longest_cap_cup(ls);
    CHECK(static_cast<int>(found.ids.size()) == oracle::exhaustive_cap_cup(rows_of(ls)));
    CHECK(classify_cap_cup(found.lines) == found.kind);
    CHECK(std::is_sorted(found.ids.begin(), found.ids.end()));
    for (std::size_t i = 0; i < found.ids.size(); ++i) {
      CHECK(found.lines.line(static_cast<int>(i + 1)).slope == ls.line(found.ids[i]).slope);
    }
  }
}

TEST_CASE("erdos_szekeres_bound") {
  CHECK(erdos_szekeres_bound(2) == 2);
  CHECK(erdos_szekeres_bound(3) == 3);
  CHECK(erdos_szekeres_bound(6) == 3);
  CHECK(erdos_szekeres_bound(7) == 4);
  CHECK(erdos_szekeres_bound(20) == 4);
  CHECK(erdos_szekeres_bound(21) == 5);
  CHECK(erdos_szekeres_bound(50) == 5);
  CHECK(erdos_szekeres_bound(100) == 6);
  CHECK(erdos_szekeres_bound(253) == 7);
}

TEST_CASE("longest_cap_cup is tight on extremal configurations") {
  for (int k = 4; k <= 6; ++k) {
    auto pts = oracle::erdos_szekeres_extremal(k, k);
    std::vector<Line> lines;
    for (const auto& p : pts) lines.push_back(dualize_point(p, static_cast<int>(lines.size()) + 1));
    LineSet ls = verify_general_position(lines);
    auto found = longest_cap_cup(ls);
    CHECK(static_cast<int>(found.ids.size()) == k - 1);
    CHECK(static_cast<int>(found.ids.size()) >= erdos_szekeres_bound(static_cast<long long>(ls.size())));
  }
}

TEST_CASE("intersection_order") {
  // slopes -1, 0, 1 through distinct crossings
  LineSet ls = make({{Q(-1), Q(0)}, {Q(0), Q(1)}, {Q(1), Q(3)}});
  auto order = intersection_order(ls, 2);
  REQUIRE(order.size() == 2);
  // y = -1 meets y = -x at x = 1 and y = x - 3 at x = 2
  CHECK(order[0].partner == 1);
  CHECK(order[0].at == Point{Q(1), Q(-1)});
  CHECK(order[1].partner == 3);
  CHECK(order[1].at == Point{Q(2), Q(-1)});

  std::mt19937_64 rng(5);
  LineSet cap = testsupport::random_cap(rng, 7);
  REQUIRE(classify_cap_cup(cap) == CapCup::Cap);
  auto on_first = intersection_order(cap, 1);
  CHECK(on_first.size() == 6);
  for (std::size_t i = 0; i < on_first.size(); ++i) CHECK(on_first[i].partner == static_cast<int>(i + 2));
}

TEST_CASE("color classes") {
  CHECK(error_code([] { ColorClasses(10, 4); }) == static_cast<int>(Errc::DivisibilityError));
  ColorClasses cc(12, 4);
  CHECK(cc.class_size() == 3);
  CHECK(cc.class_of(1) == 1);
  CHECK(cc.class_of(3) == 1);
  CHECK(cc.class_of(4) == 2);
  CHECK(cc.class_of(12) == 4);
  CHECK(cc.first_id(3) == 7);
  CHECK(cc.last_id(3) == 9);
}

TEST_CASE("region_of") {
  std::mt19937_64 rng(9);
  LineSet ls = testsupport::random_lines(rng, 4);
  ColorClasses cc(4, 2);
  auto order = intersection_order(ls, 1);
  CHECK(region_of(ls, cc, 1, order.front().at.x - 1) == RegionIndex{1, 1});
  CHECK(region_of(ls, cc, 1, order.back().at.x + 1) == RegionIndex{1, 2});
  CHECK(region_of(ls, cc, 4, intersection_order(ls, 4).back().at.x + 1) == RegionIndex{2, 2});
  CHECK(error_code([&] { region_of(ls, cc, 1, order[1].at.x); }) == static_cast<int>(Errc::OnIntersection));
  const Scalar mid = (order[0].at.x + order[1].at.x) / 2;
  const Scalar near = (order[0].at.x * 3 + order[1].at.x) / 4;
  CHECK(region_of(ls, cc, 1, mid) == region_of(ls, cc, 1, near));

  LineSet twelve = testsupport::random_lines(rng, 12);
  RegionAtlas atlas(twelve, ColorClasses(12, 4));
  CHECK(atlas.regions().size() == 10);
}

TEST_CASE("region hulls on caps") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 20; ++trial) {
    LineSet ls = testsupport::random_cap(rng, 12);
    RegionAtlas atlas(ls, ColorClasses(12, 4));
    std::vector<Point> crossings;
    for (int i = 1; i <= 12; ++i) {
      for (const auto& c : atlas.crossings(i)) crossings.push_back(c.at);
    }
    for (RegionIndex r : atlas.regions()) {
      const RegionHull& h = atlas.hull(r);
      CHECK(h.side_count() <= 5);
      CHECK(!h.degenerate);
      for (std::size_t s = 0; s < h.sides.size(); ++s) CHECK(h.sides[s].label == static_cast<int>(s + 1));
      for (const Point& v : h.vertices) {
        CHECK(std::find(crossings.begin(), crossings.end(), v) != crossings.end());
      }
      if (!h.bounded()) {
        REQUIRE(h.recession.size() == 2);
        for (const Vec2& d : h.recession) {
          bool along_line = false;
          for (const Line& l : ls.lines()) along_line |= cross(d, l.direction()) == 0;
          CHECK(along_line);
        }
      }
    }
  }
}

TEST_CASE("region partition covers every sampled line point") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    LineSet ls = testsupport::random_cap(rng, 12);
    RegionAtlas atlas(ls, ColorClasses(12, 4));
    for (int s = 0; s < 200; ++s) {
      const int id = 1 + static_cast<int>(rng() % 12);
      const Scalar x = testsupport::random_rational(rng, 30, 97);
      RegionIndex r;
      try {
        r = atlas.region_of(id, x);
      } catch (const Error&) {
        continue;
      }
      CHECK(r == region_of(ls, atlas.classes(), id, x));
      CHECK(atlas.hull(r).contains(ls.line(id).point_at(x)));
      // the point belongs to no other region's defining segments
      const int cls = atlas.classes().class_of(id);
      const int seg = atlas.segment_of(id, x);
      CHECK(((r.a == cls && r.b == seg) || (r.a == seg && r.b == cls)));
    }
  }
}

TEST_CASE("region hull errors") {
  std::mt19937_64 rng(3);
  LineSet ls = testsupport::random_cap(rng, 6);
  RegionAtlas atlas(ls, ColorClasses(6, 3));
  CHECK(error_code([&] { atlas.hull({2, 1}); }) == static_cast<int>(Errc::EmptyRegion));
  CHECK(error_code([&] { atlas.hull({1, 4}); }) == static_cast<int>(Errc::EmptyRegion));
  RegionAtlas single(ls, ColorClasses(6, 1));
  CHECK(error_code([&] { single.hull({1, 1}); }) == static_cast<int>(Errc::InvalidArgument));
}
