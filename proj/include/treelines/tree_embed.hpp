#pragma once

// Trees with vertices pinned to lines: exact crossing checks, a search
// solver, universality scans, and the region-based path descriptors.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "treelines/lineset.hpp"

namespace treelines {

/// Rooted tree on vertices 0..n-1 with edges directed away from the root.
class Tree {
 public:
  Tree() = default;
  /// Throws Validation unless the edges form a tree rooted at `root`.
  Tree(int n, std::vector<std::pair<int, int>> edges, int root = 0);

  int n() const noexcept { return n_; }
  int root() const noexcept { return root_; }
  int parent(int v) const { return parent_.at(static_cast<std::size_t>(v)); }  // -1 for the root
  const std::vector<int>& children(int v) const { return children_.at(static_cast<std::size_t>(v)); }
  /// (parent, child) pairs in input order.
  const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
  /// Root first, children in input order.
  std::vector<int> bfs_order() const;

 private:
  int n_ = 0;
  int root_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  std::vector<std::pair<int, int>> edges_;
};

/// vertex -> line id, a bijection onto 1..n.
struct Assignment {
  std::vector<int> line_of;

  /// Throws SizeMismatch or InvalidArgument.
  void validate(const Tree& t, const LineSet& ls) const;
};

/// vertex -> x; the vertex sits at (x, l(x)) on its assigned line.
struct Embedding {
  std::vector<Scalar> x;

  Point point(const LineSet& ls, const Assignment& asg, int v) const;
};

enum class ViolationKind { DuplicateVertex, ProperCross, Overlap, VertexOnEdge };
enum class WarningKind { VertexOnCrossing, EdgeThroughCrossing };
const char* to_string(ViolationKind k);
const char* to_string(WarningKind k);

/// Edges are named by their child vertex. Witnesses: DuplicateVertex {u, v};
/// ProperCross and Overlap {edge, edge}; VertexOnEdge {vertex, edge};
/// VertexOnCrossing {vertex}; EdgeThroughCrossing {edge}. Pairs are sorted.
struct Violation {
  ViolationKind kind;
  std::vector<int> witness;
  friend bool operator==(const Violation&, const Violation&) = default;
  friend auto operator<=>(const Violation&, const Violation&) = default;
};

struct Warning {
  WarningKind kind;
  std::vector<int> witness;
  friend bool operator==(const Warning&, const Warning&) = default;
  friend auto operator<=>(const Warning&, const Warning&) = default;
};

struct EmbeddingVerdict {
  std::vector<Violation> violations;  // sorted, complete
  std::vector<Warning> warnings;      // sorted, complete

  bool crossing_free() const noexcept { return violations.empty(); }
};

/// Relative interiors of edges must avoid every other edge and every vertex;
/// edges may meet only at a shared tree vertex. Warnings flag vertices on
/// arrangement crossings and edges through them.
EmbeddingVerdict check_embedding(const LineSet& ls, const Tree& t, const Assignment& asg, const Embedding& emb);

/// `refine` equally spaced points strictly inside each finite interval
/// between consecutive crossings on the line, plus the outermost crossings
/// -1 and +1. Sorted ascending. A line with no crossings gets {0}.
std::vector<Scalar> candidate_positions(const LineSet& ls, int line_id, int refine);

struct SolveOptions {
  int refine = 2;
  long long budget = 1000;          // randomized restarts after discrete exhaustion
  std::uint64_t seed = 1;
  long long node_limit = 2000000;   // discrete backtracking nodes before giving up on that phase
};

struct SolveResult {
  std::optional<Embedding> found;  // re-verified crossing-free, no warnings
  long long nodes = 0;
  long long restarts = 0;
  bool discrete_exhausted = false;  // the discrete phase finished without hitting node_limit
};

/// Backtracking over candidate positions, vertices taken from the BFS
/// frontier with the fewest live candidates first, then seeded randomized
/// restarts. A miss is not a proof that no embedding exists.
SolveResult solve(const LineSet& ls, const Tree& t, const Assignment& asg, const SolveOptions& opts);

struct ScanEntry {
  std::vector<int> line_of;  // the bijection
  bool found = false;
  std::optional<Embedding> embedding;
};

struct ScanReport {
  std::vector<ScanEntry> entries;  // all n! bijections in lexicographic order
  long long found = 0;
  long long not_found = 0;  // candidate non-support witnesses only
};

/// Runs solve on every bijection. Throws TooLarge for n > 7 unless
/// `allow_large`. `workers` 0 uses the hardware concurrency.
ScanReport scan_universality(const LineSet& ls, const Tree& t, const SolveOptions& opts, unsigned workers = 0,
                             bool allow_large = false);

struct CombTuple {
  RegionIndex region;
  int enter = 0;  // side label of the region hull crossed when entering, 0 if none
  int leave = 0;  // side label crossed when leaving, 0 if none
  friend bool operator==(const CombTuple&, const CombTuple&) = default;
};

/// Regions met by the directed segment from p to q, starting with the
/// region of p, consecutive repeats merged. Throws DegenerateContact when the
/// segment passes through a crossing of two lines or runs along a line, and
/// InvalidArgument when p is on no line.
std::vector<CombTuple> comb_type(const RegionAtlas& atlas, const Segment& edge);

/// Class ids of the assigned lines along a directed path. Throws NotAPath.
std::vector<int> color_type(const Tree& t, const Assignment& asg, const ColorClasses& cc, const std::vector<int>& path);

struct PathDescriptor {
  std::vector<RegionIndex> visited;              // 0-th: region of the start vertex
  std::vector<std::vector<Point>> entry_points;  // per path, one per visited region
  std::vector<std::vector<Point>> doors;         // hull of the i-th entry points
};

/// All paths start at one vertex. The i-th entry point is where the path
/// last crossed into the hull of the i-th visited region before reaching
/// it, or the first point of the region itself if the path never was
/// outside that hull. Throws NonUniform when the visited sequences differ.
PathDescriptor path_descriptor(const RegionAtlas& atlas, const Tree& t, const Assignment& asg, const Embedding& emb,
                               const std::vector<std::vector<int>>& paths);

/// Complete delta-ary tree of depth d with its last leaf removed, numbered
/// in BFS order. n = 1 + delta + ... + delta^d - 1.
Tree build_theorem_tree(int d, int delta);

/// Root to line 1; the k children of every vertex spread evenly over the
/// classes (k / c each). A vertex with one child short of a multiple of c
/// (the parent of the removed leaf) has one fewer in class 1. Lines within a
/// class are shuffled under `seed`. Throws DivisibilityError or SizeMismatch.
Assignment build_iota(const Tree& t, const LineSet& ls, const ColorClasses& cc, std::uint64_t seed);

}  // namespace treelines
