#include "treelines/ramsey.hpp"

#include <algorithm>
#include <array>

namespace treelines {

const char* to_string(Color c) { return c == Color::Red ? "red" : "blue"; }

const char* to_string(GapDirection d) {
  return d == GapDirection::NonDecreasing ? "non-decreasing" : "non-increasing";
}

const char* to_string(DoublingVariant v) { return v == DoublingVariant::Lower ? "lower" : "upper"; }

TripleColoring::TripleColoring(int n) : n_(n) {
  if (n < 0 || n > 2000) throw Error(Errc::InvalidArgument, "triple coloring size out of range", {n});
  data_.assign(static_cast<std::size_t>(n) * n * n, static_cast<std::uint8_t>(Color::Blue));
}

std::size_t TripleColoring::index(int i, int j, int k) const {
  std::array<int, 3> v = {i, j, k};
  std::sort(v.begin(), v.end());
  if (v[0] < 1 || v[2] > n_ || v[0] == v[1] || v[1] == v[2]) {
    throw Error(Errc::InvalidArgument, "not a triple of distinct vertices", {i, j, k});
  }
  const auto n = static_cast<std::size_t>(n_);
  return (static_cast<std::size_t>(v[0] - 1) * n + static_cast<std::size_t>(v[1] - 1)) * n + static_cast<std::size_t>(v[2] - 1);
}

bool is_mono_path(const TripleColoring& tc, const HyperPath& path) {
  const auto& v = path.vertices;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > tc.n()) return false;
    if (i > 0 && v[i - 1] >= v[i]) return false;
  }
  for (std::size_t i = 0; i + 2 < v.size(); ++i) {
    if (tc.color(v[i], v[i + 1], v[i + 2]) != path.color) return false;
  }
  return true;
}

namespace {

// Longest path of one color via g[i][j] = longest path starting with the
// consecutive pair (i, j); then a greedy walk picks the smallest vertices.
HyperPath longest_of_color(const TripleColoring& tc, Color c) {
  const int n = tc.n();
  std::vector<std::vector<int>> g(static_cast<std::size_t>(n + 1), std::vector<int>(static_cast<std::size_t>(n + 1), 2));
  for (int i = n - 2; i >= 1; --i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      int best = 2;
      for (int k = j + 1; k <= n; ++k) {
        if (tc.color(i, j, k) == c) best = std::max(best, g[j][k] + 1);
      }
      g[i][j] = best;
    }
  }
  int bi = 1, bj = 2;
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      if (g[i][j] > g[bi][bj]) bi = i, bj = j;
    }
  }
  HyperPath path{{bi, bj}, c};
  int i = bi, j = bj;
  while (g[i][j] > 2) {
    int next = j + 1;
    while (!(tc.color(i, j, next) == c && g[j][next] == g[i][j] - 1)) ++next;
    path.vertices.push_back(next);
    i = j;
    j = next;
  }
  return path;
}

}  // namespace

HyperPath longest_mono_path(const TripleColoring& tc) {
  if (tc.n() < 3) throw Error(Errc::TooFew, "monochromatic paths need n >= 3");
  HyperPath red = longest_of_color(tc, Color::Red);
  HyperPath blue = longest_of_color(tc, Color::Blue);
  if (red.vertices.size() != blue.vertices.size()) return red.vertices.size() > blue.vertices.size() ? red : blue;
  return blue.vertices < red.vertices ? blue : red;
}

int mono_path_bound(long long n) {
  if (n < 3) throw Error(Errc::TooFew, "bound defined for n >= 3");
  return erdos_szekeres_bound(n);
}

TripleColoring color_by_gaps(const LineSet& ls) {
  const int n = static_cast<int>(ls.size());
  if (n < 3) throw Error(Errc::TooFew, "gap coloring needs at least three lines");
  std::vector<std::vector<AngleGap>> gap(static_cast<std::size_t>(n + 1), std::vector<AngleGap>(static_cast<std::size_t>(n + 1)));
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) gap[i][j] = angle_gap(ls.line(i), ls.line(j));
  }
  TripleColoring tc(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (compare_angle_gap(gap[j][k], gap[i][j]) < 0) tc.set(i, j, k, Color::Red);
      }
    }
  }
  return tc;
}

bool is_monotone_chain(const LineSet& ls, const MonotoneGapChain& chain) {
  const auto& ids = chain.ids;
  if (!std::is_sorted(ids.begin(), ids.end()) || std::adjacent_find(ids.begin(), ids.end()) != ids.end()) return false;
  for (std::size_t t = 0; t + 2 < ids.size(); ++t) {
    const auto order = compare_angle_gap({ls.line(ids[t + 1]), ls.line(ids[t + 2])}, {ls.line(ids[t]), ls.line(ids[t + 1])});
    if (chain.direction == GapDirection::NonDecreasing && order < 0) return false;
    if (chain.direction == GapDirection::NonIncreasing && order > 0) return false;
  }
  return true;
}

MonotoneGapChain extract_monotone_gaps(const LineSet& ls) {
  const HyperPath path = longest_mono_path(color_by_gaps(ls));
  MonotoneGapChain chain{path.vertices,
                         path.color == Color::Red ? GapDirection::NonIncreasing : GapDirection::NonDecreasing};
  if (!is_monotone_chain(ls, chain)) throw Error(Errc::Validation, "extracted gap chain is not monotone");
  return chain;
}

std::optional<int> doubling_violation(const LineSet& ls, const std::vector<int>& ids, DoublingVariant variant) {
  const int k = static_cast<int>(ids.size());
  auto L = [&](int pos) -> const Line& { return ls.line(ids[static_cast<std::size_t>(pos - 1)]); };
  for (int j = 2; j <= k - 1; ++j) {
    const auto order = variant == DoublingVariant::Lower
                           ? compare_angle_gap({L(j), L(j + 1)}, {L(1), L(j)})
                           : compare_angle_gap({L(j - 1), L(j)}, {L(j), L(k)});
    if (order < 0) return j;
  }
  return std::nullopt;
}

bool span_is_acute(const LineSet& ls, const std::vector<int>& ids) {
  if (ids.size() < 2) return true;
  return angle_gap(ls.line(ids.front()), ls.line(ids.back())).cls == GapClass::Acute;
}

DoublingChain extract_doubling(const LineSet& ls) {
  if (ls.size() < 3) throw Error(Errc::TooFew, "doubling extraction needs at least three lines");
  std::vector<int> negative, nonnegative;
  for (const Line& l : ls.lines()) (l.slope < 0 ? negative : nonnegative).push_back(l.id);
  const std::vector<int>& side = negative.size() > nonnegative.size() ? negative : nonnegative;
  if (side.size() < 3) throw Error(Errc::ChainTooShort, "sign class has fewer than three lines", {static_cast<int>(side.size())});

  const LineSet sub = ls.subset(side);
  const MonotoneGapChain chain = extract_monotone_gaps(sub);
  const int len = static_cast<int>(chain.ids.size());

  // Positions 1, 2, 4, ... from the front for non-decreasing gaps, mirrored
  // from the back for non-increasing ones.
  DoublingChain out;
  out.variant = chain.direction == GapDirection::NonDecreasing ? DoublingVariant::Lower : DoublingVariant::Upper;
  for (int p = 1; p <= len; p *= 2) {
    const int pos = out.variant == DoublingVariant::Lower ? p : len + 1 - p;
    out.ids.push_back(sub.input_label(chain.ids[static_cast<std::size_t>(pos - 1)]));
  }
  std::sort(out.ids.begin(), out.ids.end());
  if (out.ids.size() < 3) {
    throw Error(Errc::ChainTooShort, "doubling subsequence has fewer than three lines", {static_cast<int>(out.ids.size())});
  }
  if (!span_is_acute(ls, out.ids) || doubling_violation(ls, out.ids, out.variant)) {
    throw Error(Errc::Validation, "doubling chain failed verification");
  }
  return out;
}

}  // namespace treelines
