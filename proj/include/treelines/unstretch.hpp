#pragma once

// Six-line frames, three-edge configurations and the sine-chain certificate
// that such configurations cannot be drawn straight.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>

#include "treelines/lineset.hpp"
#include "treelines/ramsey.hpp"

namespace treelines {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<80>,
                                           boost::multiprecision::et_off>;

Real to_real(const Scalar& q);

struct SixLineFrame {
  LineSet lines;                 // the six lines, ids 1..6 in slope order
  std::vector<int> source_ids;   // their ids in the set they came from
  std::optional<DoublingVariant> variant;  // unset for unchecked frames
  CapCup kind = CapCup::Neither;
  bool checked = false;

  const Line& line(int k) const { return lines.line(k); }
};

/// Checks span < pi/2, then the doubling inequalities (Lower, else Upper),
/// then cap/cup. Throws SpanTooWide, NotDoubling (witness: first failing
/// Lower j) or NotCapOrCup.
SixLineFrame validate_frame(const LineSet& ls, const std::vector<int>& ids);
/// No hypothesis checks beyond general position; for exploration only.
SixLineFrame explore_frame(const LineSet& ls, const std::vector<int>& ids);

/// Exact symmetries of the plane used to bring a frame into the cap, lower
/// orientation in which properties (i)-(iii) are phrased. Each is an involution.
enum class FrameSymmetry { Identity, MirrorX, MirrorY, HalfTurn };

const char* to_string(FrameSymmetry m);
Point apply(FrameSymmetry m, const Point& p);
Line apply(FrameSymmetry m, const Line& l);

struct CanonicalFrame {
  SixLineFrame frame;  // a checked Cap, Lower frame
  FrameSymmetry map = FrameSymmetry::Identity;  // original -> canonical
};

/// Maps a checked frame onto a Cap, Lower one: upper caps by x -> -x, lower
/// cups by the half turn, upper cups by y -> -y. source_ids follow the lines.
CanonicalFrame canonical_frame(const SixLineFrame& frame);

/// Edge j (1..3) runs from A[j-1] on l_{2j} to C[j-1] on l_{2j-1}.
struct TripleEdgeConfig {
  std::array<Point, 3> A;
  std::array<Point, 3> C;

  Segment edge(int j) const { return Segment(A[static_cast<std::size_t>(j - 1)], C[static_cast<std::size_t>(j - 1)]); }
};

/// Builds a configuration from x-parameters of its six endpoints.
TripleEdgeConfig config_from_x(const SixLineFrame& frame, const std::array<Scalar, 3>& a_x,
                               const std::array<Scalar, 3>& c_x);

enum CheckMask : unsigned { CheckBelow = 1u, CheckHull = 2u, CheckBetween = 4u, CheckAll = 7u };

struct ConfigVerdict {
  enum Kind { Valid, Violation, MissingCrossing } kind = Valid;
  int property = 0;  // 1, 2 or 3 for (i), (ii), (iii)
  int edge = 0;      // j

  bool valid() const noexcept { return kind == Valid; }
  std::string describe() const;
};

/// (i) the vertical line through the apex l_{2j} x l_{2j-1} meets e_j strictly
/// below the apex for j = 1, 3 and strictly above for j = 2; (ii) the closed
/// edge misses the closed hull of the 15 crossings; (iii) A_j lies on the
/// closed segment from the apex to l_{2j} x e_{j+1}. Checked in that order.
/// Throws InvalidArgument when an endpoint is off its line.
ConfigVerdict validate_config(const SixLineFrame& frame, const TripleEdgeConfig& cfg, unsigned checks = CheckAll);

/// The 15 pairwise crossings of the frame and their hull.
std::vector<Point> frame_crossings(const SixLineFrame& frame);

struct ChainValues {
  std::array<Real, 6> alpha;  // alpha_1..alpha_6
  std::array<Real, 3> a;
  std::array<Real, 3> b;
  std::array<Real, 3> r;
};

/// A_j = e_j x l_{2j}; B_j = l_{2j} x l_{2(j+1)}; a_j = |A_j B_j|,
/// b_j = |B_j A_{j-1}| (A_0 = A_3), r_j = |B_j B_{j+1}|; alpha_j for j > 1 is
/// the smaller angle between l_{j-1} and l_j, alpha_1 = pi - the rest.
ChainValues derive_chain(const SixLineFrame& frame, const TripleEdgeConfig& cfg);

struct ChainCheck {
  enum Kind { Contradiction, Consistent, Indeterminate, HypothesisFail } kind = Contradiction;
  Real b1;   // forced by a_3 and the r's through the sine chain
  Real lhs;  // b1 - r3
  Real rhs;  // a3
  bool descending = false;  // sin a6 <= ... <= sin a2 <= sin a1 holds

  std::string describe() const;
};

/// Propagates b3, a2, b2, a1, b1 from a_3 and r, then compares b1 - r3 with
/// a3 using a 1e-9 relative guard band.
ChainCheck lemma24_check(const ChainValues& cv);

/// The two regroupings of (sin a2/sin a1)(sin a4/sin a3)(sin a6/sin a5):
/// first = {s2/s1, s4/s3, s6/s5}, second = {s6/s1, s2/s3, s4/s5}.
std::pair<std::array<Real, 3>, std::array<Real, 3>> ratio_factors(const ChainValues& cv);

struct SearchOptions {
  long long samples = 1000000;
  std::uint64_t seed = 42;
  unsigned checks = CheckAll;
  unsigned workers = 0;           // 0: hardware concurrency
  double local_fraction = 0.2;    // share of the budget spent on hill climbing
};

struct SearchReport {
  std::optional<TripleEdgeConfig> found;
  long long evaluated = 0;
  long long exact_checks = 0;
};

/// Random search for a configuration passing validate_config(checks).
/// Survivors of a conservative double-precision filter are re-checked
/// exactly; the returned configuration is always exactly valid.
SearchReport feasibility_search(const SixLineFrame& frame, const SearchOptions& opts);

}  // namespace treelines
