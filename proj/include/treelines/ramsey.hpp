#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "treelines/lineset.hpp"

namespace treelines {

enum class Color : std::uint8_t { Red, Blue };
const char* to_string(Color c);

/// Two-coloring of all triples {i < j < k} of 1..n.
class TripleColoring {
 public:
  /// Every triple starts Blue.
  explicit TripleColoring(int n);

  int n() const noexcept { return n_; }
  /// Arguments in any order; they must be distinct.
  Color color(int i, int j, int k) const { return static_cast<Color>(data_[index(i, j, k)]); }
  void set(int i, int j, int k, Color c) { data_[index(i, j, k)] = static_cast<std::uint8_t>(c); }

 private:
  std::size_t index(int i, int j, int k) const;

  int n_;
  std::vector<std::uint8_t> data_;
};

struct HyperPath {
  std::vector<int> vertices;  // strictly increasing
  Color color = Color::Red;
};

/// True when the vertices increase and every consecutive triple has `color`.
bool is_mono_path(const TripleColoring& tc, const HyperPath& path);

/// Longest monochromatic path; among those the lexicographically smallest
/// vertex sequence, Red before Blue on a full tie. O(n^3).
HyperPath longest_mono_path(const TripleColoring& tc);

/// max{k : C(2k-4, k-2) + 1 <= n}; requires n >= 3.
int mono_path_bound(long long n);

/// Red when gap(l_j, l_k) < gap(l_i, l_j) for i < j < k, else Blue.
TripleColoring color_by_gaps(const LineSet& ls);

enum class GapDirection { NonDecreasing, NonIncreasing };
const char* to_string(GapDirection d);

struct MonotoneGapChain {
  std::vector<int> ids;  // increasing line ids of the input set
  GapDirection direction = GapDirection::NonDecreasing;
};

bool is_monotone_chain(const LineSet& ls, const MonotoneGapChain& chain);
MonotoneGapChain extract_monotone_gaps(const LineSet& ls);

enum class DoublingVariant { Lower, Upper };
const char* to_string(DoublingVariant v);

struct DoublingChain {
  std::vector<int> ids;
  DoublingVariant variant = DoublingVariant::Lower;
};

/// Lower: a(l_{j+1}) - a(l_j) >= a(l_j) - a(l_1) for 2 <= j <= k-1.
/// Upper: a(l_j) - a(l_{j-1}) >= a(l_k) - a(l_j) for 2 <= j <= k-1.
/// Returns the first failing j (1-based position in `ids`), if any.
std::optional<int> doubling_violation(const LineSet& ls, const std::vector<int>& ids, DoublingVariant variant);

/// Angle between the extreme lines of `ids` is below a right angle.
bool span_is_acute(const LineSet& ls, const std::vector<int>& ids);

/// Restricts to the majority slope-sign class, extracts a monotone gap chain
/// and keeps the doubling positions. Throws ChainTooShort below 3 lines.
DoublingChain extract_doubling(const LineSet& ls);

}  // namespace treelines
