#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "../support/random.hpp"
#include "treelines/ramsey.hpp"

using namespace treelines;

namespace {

TripleColoring random_coloring(std::mt19937_64& rng, int n) {
  TripleColoring tc(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) tc.set(i, j, k, rng() & 1u ? Color::Red : Color::Blue);
    }
  }
  return tc;
}

// Extremal point set lifted to triples: a monochromatic path is a cup or a cap.
TripleColoring extremal_coloring(int k) {
  auto pts = oracle::erdos_szekeres_extremal(k, k);
  const int n = static_cast<int>(pts.size());
  TripleColoring tc(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int l = j + 1; l <= n; ++l) {
        const int o = orientation(pts[i - 1], pts[j - 1], pts[l - 1]);
        tc.set(i, j, l, o > 0 ? Color::Red : Color::Blue);
      }
    }
  }
  return tc;
}

}  // namespace

TEST_CASE("triple coloring storage") {
  TripleColoring tc(5);
  CHECK(tc.color(1, 2, 3) == Color::Blue);
  tc.set(3, 1, 2, Color::Red);
  CHECK(tc.color(1, 2, 3) == Color::Red);
  CHECK(tc.color(2, 3, 1) == Color::Red);
  CHECK_THROWS_AS(tc.color(1, 1, 2), Error);
  CHECK_THROWS_AS(tc.color(0, 1, 2), Error);
}

TEST_CASE("longest_mono_path fixtures") {
  TripleColoring red(6);
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) {
      for (int k = j + 1; k <= 6; ++k) red.set(i, j, k, Color::Red);
    }
  }
  auto all = longest_mono_path(red);
  CHECK(all.vertices == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(all.color == Color::Red);

  TripleColoring one(3);
  auto p = longest_mono_path(one);
  CHECK(p.vertices == std::vector<int>{1, 2, 3});
  CHECK(p.color == Color::Blue);

  CHECK_THROWS_AS(longest_mono_path(TripleColoring(2)), Error);
}

TEST_CASE("longest_mono_path matches brute force") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 120; ++trial) {
    const int n = 3 + trial % 10;
    TripleColoring tc = random_coloring(rng, n);
    auto fast = longest_mono_path(tc);
    auto slow = oracle::brute_mono_path(tc);
    CHECK(fast.vertices == slow.vertices);
    CHECK(fast.color == slow.color);
    CHECK(is_mono_path(tc, fast));
  }
}

TEST_CASE("mono_path_bound") {
  CHECK(mono_path_bound(3) == 3);
  CHECK(mono_path_bound(7) == 4);
  CHECK(mono_path_bound(100) == 6);
  CHECK_THROWS_AS(mono_path_bound(2), Error);
}

TEST_CASE("longest_mono_path respects the bound, tightly on extremal colorings") {
  std::mt19937_64 rng(43);
  for (int n : {3, 7, 21, 40, 71, 90}) {
    auto p = longest_mono_path(random_coloring(rng, n));
    CHECK(static_cast<int>(p.vertices.size()) >= mono_path_bound(n));
  }
  for (int k = 4; k <= 6; ++k) {
    TripleColoring tc = extremal_coloring(k);
    auto p = longest_mono_path(tc);
    CHECK(static_cast<int>(p.vertices.size()) == k - 1);
    CHECK(mono_path_bound(tc.n()) == k - 1);
  }
}

TEST_CASE("color_by_gaps") {
  std::vector<Line> lines = {{Scalar(0), Scalar(0), 1}, {Scalar(1), Scalar(1), 2}, {Scalar(3), Scalar(9), 3}};
  TripleColoring tc = color_by_gaps(verify_general_position(lines));
  CHECK(tc.color(1, 2, 3) == Color::Red);

  // exactly equal gaps are Blue
  LineSet even = testsupport::lines_at_multiples({10, 20, 30}, testsupport::tan_one_degree());
  CHECK(color_by_gaps(even).color(1, 2, 3) == Color::Blue);
}

TEST_CASE("extract_monotone_gaps") {
  const Scalar t = testsupport::tan_one_degree();
  auto up = extract_monotone_gaps(testsupport::lines_at_multiples({0, 1, 2, 4, 8, 16}, t));
  CHECK(up.ids == std::vector<int>{1, 2, 3, 4, 5, 6});
  CHECK(up.direction == GapDirection::NonDecreasing);

  // gaps 8, 4, 2, 1 strictly shrink (Red needs strict decrease)
  auto down = extract_monotone_gaps(testsupport::lines_at_multiples({0, 8, 12, 14, 15}, t));
  CHECK(down.ids == std::vector<int>{1, 2, 3, 4, 5});
  CHECK(down.direction == GapDirection::NonIncreasing);

  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 30; ++trial) {
    LineSet ls = testsupport::random_lines(rng, 24);
    auto chain = extract_monotone_gaps(ls);
    CHECK(is_monotone_chain(ls, chain));
    CHECK(static_cast<int>(chain.ids.size()) >= mono_path_bound(24));
  }
}

TEST_CASE("extract_doubling") {
  const Scalar t = testsupport::tan_one_degree();
  LineSet ls = testsupport::lines_at_multiples({0, 1, 2, 4, 8, 16}, t);
  auto chain = extract_doubling(ls);
  CHECK(chain.ids == std::vector<int>{1, 2, 4});
  CHECK(chain.variant == DoublingVariant::Lower);

  // equal gaps: doubling positions hold with the counting inequality
  LineSet even = testsupport::lines_at_multiples({0, 3, 6, 9, 12, 15, 18, 21, 24}, t);
  auto e = extract_doubling(even);
  CHECK(e.ids == std::vector<int>{1, 2, 4, 8});
  CHECK(!doubling_violation(even, e.ids, DoublingVariant::Lower));

  CHECK(doubling_violation(testsupport::lines_at_multiples({0, 5, 10, 15, 20, 25}, t), {1, 2, 3, 4, 5, 6},
                           DoublingVariant::Lower) == 3);

  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 20; ++trial) {
    LineSet rnd = testsupport::random_lines(rng, 40);
    DoublingChain d;
    try {
      d = extract_doubling(rnd);
    } catch (const Error& err) {
      CHECK(err.code() == Errc::ChainTooShort);
      continue;
    }
    CHECK(span_is_acute(rnd, d.ids));
    CHECK(!doubling_violation(rnd, d.ids, d.variant));
    CHECK(d.ids.size() >= 3);
  }
}
