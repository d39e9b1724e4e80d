#include <doctest.h>

#include <cmath>
#include <random>

#include "../support/frames.hpp"
#include "../support/random.hpp"
#include "treelines/unstretch.hpp"

using namespace treelines;

namespace {

const std::vector<int> kSix = {1, 2, 3, 4, 5, 6};

SixLineFrame doubling_cap() {
  return validate_frame(testsupport::lines_at_multiples({0, 1, 2, 4, 8, 16}, testsupport::tan_one_degree()), kSix);
}

// A frame wider than a right angle; configurations exist here.
SixLineFrame wide_frame() {
  return explore_frame(testsupport::lines_at_multiples({-30, -20, 0, 5, 10, 70}, testsupport::tan_one_degree()), kSix);
}

Scalar midpoint_x(const SixLineFrame& f, int line) {
  auto order = intersection_order(f.lines, line);
  return (order.front().at.x + order.back().at.x) / 2;
}

ChainValues chain_from_degrees(const std::array<double, 5>& deg, double a3, std::array<double, 3> r) {
  ChainValues cv;
  const Real pi = boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>();
  Real sum = 0;
  for (std::size_t k = 0; k < 5; ++k) {
    cv.alpha[k + 1] = Real(deg[k]) * pi / 180;
    sum += cv.alpha[k + 1];
  }
  cv.alpha[0] = pi - sum;
  cv.a = {Real(0), Real(0), Real(a3)};
  cv.b = {Real(0), Real(0), Real(0)};
  cv.r = {Real(r[0]), Real(r[1]), Real(r[2])};
  return cv;
}

}  // namespace

TEST_CASE("validate_frame") {
  const Scalar t = testsupport::tan_one_degree();
  SixLineFrame f = doubling_cap();
  CHECK(f.checked);
  CHECK(f.variant == DoublingVariant::Lower);
  CHECK(f.kind == CapCup::Cap);

  try {
    validate_frame(testsupport::lines_at_multiples({0, 5, 10, 15, 20, 25}, t), kSix);
    FAIL("expected NotDoubling");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::NotDoubling);
    CHECK(e.witness() == std::vector<int>{3});
  }

  // 0..95 degrees: the extremes are more than a right angle apart
  try {
    validate_frame(testsupport::lines_at_multiples({0, 1, 2, 4, 8, 95}, t), kSix);
    FAIL("expected SpanTooWide");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::SpanTooWide);
  }

  // reversed gaps satisfy the upper family
  auto up = validate_frame(testsupport::lines_at_multiples({0, 8, 12, 14, 15, 16}, t, true), kSix);
  CHECK(up.variant == DoublingVariant::Upper);
  CHECK(up.kind == CapCup::Cup);

  std::vector<Line> zig;
  for (int i = 0; i < 6; ++i) {
    Scalar s = testsupport::tangent_multiple(t, std::vector<int>{0, 1, 2, 4, 8, 16}[static_cast<std::size_t>(i)]);
    zig.push_back({s, i % 2 ? Scalar(s * s) : Scalar(-s * s), i + 1});
  }
  CHECK_THROWS_AS(validate_frame(verify_general_position(zig), kSix), Error);

  CHECK_THROWS_AS(validate_frame(f.lines, {1, 2, 3, 4, 5}), Error);
  CHECK_THROWS_AS(validate_frame(f.lines, {2, 1, 3, 4, 5, 6}), Error);
}

TEST_CASE("canonical_frame maps every kind to a lower cap") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 16; ++trial) {
    const auto variant = trial % 2 ? DoublingVariant::Upper : DoublingVariant::Lower;
    const bool cup = (trial / 2) % 2;
    SixLineFrame f = testsupport::random_valid_frame(rng, variant, cup);
    CanonicalFrame c = canonical_frame(f);
    CHECK(c.frame.kind == CapCup::Cap);
    CHECK(c.frame.variant == DoublingVariant::Lower);
    CHECK((c.map == FrameSymmetry::Identity) == (!cup && variant == DoublingVariant::Lower));
    // the map sends crossings to crossings
    for (int k = 1; k <= 6; ++k) {
      const int src = c.frame.source_ids[static_cast<std::size_t>(k - 1)];
      const Line& original = f.line(src);
      const Line moved = apply(c.map, original);
      CHECK(moved.slope == c.frame.line(k).slope);
      CHECK(moved.dual_offset == c.frame.line(k).dual_offset);
      const Point p = original.point_at(Scalar(k, 3));
      CHECK(c.frame.line(k).contains(apply(c.map, p)));
    }
  }
  CHECK_THROWS_AS(canonical_frame(wide_frame()), Error);
}

TEST_CASE("validate_config fixtures") {
  SixLineFrame f = doubling_cap();
  // endpoints between the extreme crossings of their lines lie inside the hull
  std::array<Scalar, 3> ax, cx;
  for (int j = 1; j <= 3; ++j) {
    ax[static_cast<std::size_t>(j - 1)] = midpoint_x(f, 2 * j);
    cx[static_cast<std::size_t>(j - 1)] = midpoint_x(f, 2 * j - 1) + Scalar(1, 7);
  }
  auto inside = config_from_x(f, ax, cx);
  auto v = validate_config(f, inside, CheckHull);
  CHECK(v.kind == ConfigVerdict::Violation);
  CHECK(v.property == 2);
  CHECK(v.edge == 1);

  // e1 with A right of the apex and C left of it crosses the vertical above
  const Point apex1 = line_intersection(f.line(2), f.line(1));
  std::array<Scalar, 3> ax2 = {apex1.x + 5, Scalar(0), Scalar(0)};
  std::array<Scalar, 3> cx2 = {apex1.x - 5, Scalar(1), Scalar(1)};
  auto above = config_from_x(f, ax2, cx2);
  CHECK(validate_config(f, above).kind == ConfigVerdict::Violation);
  CHECK(validate_config(f, above).property == 1);
  CHECK(validate_config(f, above).edge == 1);
  CHECK(validate_config(f, above).describe() == "violates (i) at edge 1");

  TripleEdgeConfig off = inside;
  off.A[0].y += 1;
  CHECK_THROWS_AS(validate_config(f, off), Error);
}

TEST_CASE("valid configurations are pairwise disjoint") {
  SixLineFrame f = wide_frame();
  int found = 0;
  for (std::uint64_t seed = 1; seed <= 6; ++seed) {
    SearchOptions o;
    o.samples = 200000;
    o.seed = seed;
    o.workers = 1;
    auto rep = feasibility_search(f, o);
    if (!rep.found) continue;
    ++found;
    CHECK(validate_config(f, *rep.found).valid());
    for (int i = 1; i <= 3; ++i) {
      for (int j = i + 1; j <= 3; ++j) CHECK(segments_intersect(rep.found->edge(i), rep.found->edge(j)).kind == Contact::Disjoint);
    }
    ChainValues cv = derive_chain(f, *rep.found);
    for (std::size_t k = 0; k < 3; ++k) CHECK((cv.a[k] >= 0 && cv.b[k] >= 0 && cv.r[k] > 0));
  }
  CHECK(found > 0);
}

TEST_CASE("derive_chain") {
  SixLineFrame f = doubling_cap();
  std::mt19937_64 rng(67);
  const Real pi = boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>();
  for (int trial = 0; trial < 100; ++trial) {
    std::array<Scalar, 3> ax, cx;
    for (std::size_t k = 0; k < 3; ++k) {
      ax[k] = testsupport::random_rational(rng, 30);
      cx[k] = testsupport::random_rational(rng, 30);
    }
    TripleEdgeConfig cfg = config_from_x(f, ax, cx);
    ChainValues cv = derive_chain(f, cfg);
    Real sum = 0;
    for (const Real& a : cv.alpha) sum += a;
    CHECK(abs(sum - pi) < Real("1e-50"));
    for (std::size_t k = 0; k < 3; ++k) CHECK((cv.a[k] >= 0 && cv.b[k] >= 0 && cv.r[k] >= 0));

    // translate everything by a rational vector: y = s x - b moves to
    // y = s x - (b + s tx - ty)
    const Scalar tx = testsupport::random_rational(rng, 40), ty = testsupport::random_rational(rng, 40);
    std::vector<Line> moved;
    for (const Line& l : f.lines.lines()) moved.push_back({l.slope, l.dual_offset + l.slope * tx - ty, l.id});
    SixLineFrame g = explore_frame(verify_general_position(moved), kSix);
    TripleEdgeConfig shifted = cfg;
    for (std::size_t k = 0; k < 3; ++k) {
      shifted.A[k] = {cfg.A[k].x + tx, cfg.A[k].y + ty};
      shifted.C[k] = {cfg.C[k].x + tx, cfg.C[k].y + ty};
    }
    ChainValues cw = derive_chain(g, shifted);
    for (std::size_t k = 0; k < 6; ++k) CHECK(cv.alpha[k] == cw.alpha[k]);
    for (std::size_t k = 0; k < 3; ++k) {
      CHECK(cv.a[k] == cw.a[k]);
      CHECK(cv.b[k] == cw.b[k]);
      CHECK(cv.r[k] == cw.r[k]);
    }
  }
}

TEST_CASE("derive_chain on a mirror-symmetric frame gives r1 = r3") {
  // l2, l4 through the origin, mirror images in the axis y = -x;
  // l6 perpendicular to the axis, so B1 is the origin and B2, B3 swap.
  std::vector<Line> lines = {{Scalar(-5), Scalar(3), 1}, {Scalar(-3), Scalar(0), 2}, {Scalar(-1), Scalar(2), 3},
                             {Scalar(-1, 3), Scalar(0), 4}, {Scalar(0), Scalar(-7, 2), 5}, {Scalar(1), Scalar(2), 6}};
  SixLineFrame f = explore_frame(verify_general_position(lines), kSix);
  TripleEdgeConfig cfg = config_from_x(f, {Scalar(1), Scalar(2), Scalar(3)}, {Scalar(-1), Scalar(-2), Scalar(-3)});
  ChainValues cv = derive_chain(f, cfg);
  CHECK(abs(cv.r[0] - cv.r[2]) < Real("1e-40"));
  CHECK(cv.r[0] != cv.r[1]);
}

TEST_CASE("lemma24_check fixtures") {
  // all six angles 30 degrees: every ratio is 1
  auto unit = lemma24_check(chain_from_degrees({30, 30, 30, 30, 30}, 5, {1, 1, 1}));
  CHECK(unit.kind == ChainCheck::Contradiction);
  CHECK(abs(unit.lhs - 2) < Real("1e-40"));
  CHECK(abs(unit.rhs - 5) < Real("1e-40"));

  auto ten = lemma24_check(chain_from_degrees({10, 10, 10, 10, 10}, 1, {0.1, 0.1, 0.1}));
  CHECK(ten.kind == ChainCheck::Contradiction);
  // independent evaluation in long double
  const long double d = std::acos(-1.0L) / 180;
  const long double ratio = std::sin(10 * d) / std::sin(130 * d);
  const long double expect = ratio * (1.0L * 1 - 0.1L - 0.1L) - 0.1L;
  CHECK(std::fabs(static_cast<long double>(ten.lhs) - expect) < 1e-15L);
  CHECK(std::fabs(expect - 0.0813L) < 1e-3L);

  auto bad = lemma24_check(chain_from_degrees({10, 20, 10, 20, 10}, 1, {0.1, 0.1, 0.1}));
  CHECK(bad.kind == ChainCheck::HypothesisFail);
}

TEST_CASE("lemma24_check on random hypothesis-satisfying chains") {
  std::mt19937_64 rng(71);
  std::uniform_real_distribution<double> angle(0.01, 29.9), len(0.001, 10);
  for (int trial = 0; trial < 10000; ++trial) {
    std::array<double, 5> deg;
    for (double& a : deg) a = angle(rng);
    // either sin a6 <= ... <= sin a2 or the reverse
    std::sort(deg.begin(), deg.end());
    if (trial % 2) std::reverse(deg.begin(), deg.end());
    ChainValues cv = chain_from_degrees(deg, len(rng), {len(rng), len(rng), len(rng)});
    auto check = lemma24_check(cv);
    REQUIRE(check.kind == ChainCheck::Contradiction);

    auto [first, second] = ratio_factors(cv);
    const auto& group = check.descending ? first : second;
    for (const Real& x : group) CHECK(x <= 1);
    CHECK(group[0] * group[1] * group[2] <= 1);
  }
}

TEST_CASE("feasibility_search") {
  SixLineFrame f = doubling_cap();
  SearchOptions o;
  o.samples = 200000;
  auto none = feasibility_search(f, o);
  CHECK(!none.found);
  CHECK(none.evaluated == o.samples);

  o.checks = CheckBelow | CheckBetween;
  auto mutated = feasibility_search(f, o);
  REQUIRE(mutated.found);
  CHECK(validate_config(f, *mutated.found, o.checks).valid());
  CHECK(validate_config(f, *mutated.found).property == 2);

  // deterministic regardless of the worker count
  SearchOptions one = o, four = o;
  one.workers = 1;
  four.workers = 4;
  auto r1 = feasibility_search(f, one);
  auto r4 = feasibility_search(f, four);
  REQUIRE((r1.found && r4.found));
  for (std::size_t k = 0; k < 3; ++k) {
    CHECK(r1.found->A[k] == r4.found->A[k]);
    CHECK(r1.found->C[k] == r4.found->C[k]);
  }
}

// Found by the random search on a lower doubling cap; checked again
// independently with Python fractions.
TEST_CASE("a doubling cap that admits a valid configuration") {
  const std::vector<std::pair<const char*, const char*>> rows = {
      {"-8864931/1000000", "78587001634761/1000000000000"}, {"-241691/40000", "58414539481/1600000000"},
      {"-4464997/1000000", "19936198210009/1000000000000"}, {"-2732307/1000000", "7465501542249/1000000000000"},
      {"-1308713/1000000", "1712729716369/1000000000000"},  {"-85049/1000000", "7233332401/1000000000000"}};
  std::vector<Line> lines;
  for (const auto& [s, b] : rows) lines.push_back({parse_scalar(s), parse_scalar(b), static_cast<int>(lines.size()) + 1});
  const SixLineFrame f = validate_frame(verify_general_position(std::move(lines)), kSix);
  CHECK(f.kind == CapCup::Cap);
  CHECK(*f.variant == DoublingVariant::Lower);

  const char* ends[3][4] = {
      {"-527672023791051/35184372088832", "47594754243531952913497/879609302220800000000",
       "365364421418635/562949953421312", "-741866863992818692783787913/8796093022208000000000000"},
      {"1912026543343181/1125899906842624", "-212963296867406121073390959/17592186044416000000000000",
       "-74256687992093/536870912", "5180393530464319506588153/8388608000000000000"},
      {"-2519250648559981/281474976710656", "3315996036566654931597421/4398046511104000000000000",
       "1247374018818375/68719476736", "-25508942065308610574201431/1073741824000000000000"}};
  TripleEdgeConfig cfg;
  for (std::size_t k = 0; k < 3; ++k) {
    cfg.A[k] = {parse_scalar(ends[k][0]), parse_scalar(ends[k][1])};
    cfg.C[k] = {parse_scalar(ends[k][2]), parse_scalar(ends[k][3])};
  }
  CHECK(validate_config(f, cfg).valid());
  for (int i = 1; i <= 3; ++i) {
    for (int j = i + 1; j <= 3; ++j) CHECK(segments_intersect(cfg.edge(i), cfg.edge(j)).kind == Contact::Disjoint);
  }
  // the measured quantities break b1 - r3 > a3 directly
  const ChainValues cv = derive_chain(f, cfg);
  CHECK(cv.b[0] - cv.r[2] < cv.a[2]);
}
