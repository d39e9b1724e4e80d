#include "treelines/tree_embed.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <random>
#include <thread>

namespace treelines {

Tree::Tree(int n, std::vector<std::pair<int, int>> edges, int root) : n_(n), root_(root), edges_(std::move(edges)) {
  if (n < 1) throw Error(Errc::Validation, "a tree needs at least one vertex", {n});
  if (root < 0 || root >= n) throw Error(Errc::Validation, "root out of range", {root});
  if (static_cast<int>(edges_.size()) != n - 1) {
    throw Error(Errc::Validation, "a tree on n vertices has n - 1 edges", {n, static_cast<int>(edges_.size())});
  }
  parent_.assign(static_cast<std::size_t>(n), -1);
  children_.assign(static_cast<std::size_t>(n), {});
  for (const auto& [p, c] : edges_) {
    if (p < 0 || p >= n || c < 0 || c >= n || p == c) throw Error(Errc::Validation, "edge endpoint out of range", {p, c});
    if (c == root || parent_[static_cast<std::size_t>(c)] != -1) {
      throw Error(Errc::Validation, "vertex has two parents or the root has one", {c});
    }
    parent_[static_cast<std::size_t>(c)] = p;
    children_[static_cast<std::size_t>(p)].push_back(c);
  }
  if (static_cast<int>(bfs_order().size()) != n) throw Error(Errc::Validation, "edges do not connect all vertices to the root");
}

std::vector<int> Tree::bfs_order() const {
  std::vector<int> order = {root_};
  std::vector<char> seen(static_cast<std::size_t>(n_), 0);
  seen[static_cast<std::size_t>(root_)] = 1;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (int c : children_[static_cast<std::size_t>(order[i])]) {
      if (seen[static_cast<std::size_t>(c)]) continue;
      seen[static_cast<std::size_t>(c)] = 1;
      order.push_back(c);
    }
  }
  return order;
}

void Assignment::validate(const Tree& t, const LineSet& ls) const {
  if (static_cast<std::size_t>(t.n()) != ls.size() || line_of.size() != ls.size()) {
    throw Error(Errc::SizeMismatch, "tree, assignment and line set sizes differ",
                {t.n(), static_cast<int>(line_of.size()), static_cast<int>(ls.size())});
  }
  std::vector<char> used(ls.size() + 1, 0);
  for (std::size_t v = 0; v < line_of.size(); ++v) {
    const int l = line_of[v];
    if (l < 1 || l > static_cast<int>(ls.size()) || used[static_cast<std::size_t>(l)]) {
      throw Error(Errc::InvalidArgument, "assignment is not a bijection onto the lines", {static_cast<int>(v), l});
    }
    used[static_cast<std::size_t>(l)] = 1;
  }
}

Point Embedding::point(const LineSet& ls, const Assignment& asg, int v) const {
  const auto k = static_cast<std::size_t>(v);
  return ls.line(asg.line_of.at(k)).point_at(x.at(k));
}

const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::DuplicateVertex: return "duplicate-vertex";
    case ViolationKind::ProperCross: return "proper-cross";
    case ViolationKind::Overlap: return "overlap";
    case ViolationKind::VertexOnEdge: return "vertex-on-edge";
  }
  return "";
}

const char* to_string(WarningKind k) {
  return k == WarningKind::VertexOnCrossing ? "vertex-on-crossing" : "edge-through-crossing";
}

namespace {

std::vector<int> sorted_pair(int a, int b) { return a < b ? std::vector<int>{a, b} : std::vector<int>{b, a}; }

std::vector<Point> all_crossings(const LineSet& ls) {
  std::vector<Point> pts;
  const int n = static_cast<int>(ls.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) pts.push_back(line_intersection(ls.line(i), ls.line(j)));
  }
  return pts;
}

}  // namespace

EmbeddingVerdict check_embedding(const LineSet& ls, const Tree& t, const Assignment& asg, const Embedding& emb) {
  asg.validate(t, ls);
  if (emb.x.size() != static_cast<std::size_t>(t.n())) {
    throw Error(Errc::SizeMismatch, "embedding size differs from the tree", {static_cast<int>(emb.x.size()), t.n()});
  }
  const int n = t.n();
  std::vector<Point> pt;
  for (int v = 0; v < n; ++v) pt.push_back(emb.point(ls, asg, v));

  EmbeddingVerdict out;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (pt[static_cast<std::size_t>(u)] == pt[static_cast<std::size_t>(v)]) out.violations.push_back({ViolationKind::DuplicateVertex, {u, v}});
    }
  }

  // edges named by child; skip degenerate ones already reported as duplicates
  struct E {
    int parent, child;
    std::optional<Segment> seg;
  };
  std::vector<E> edges;
  for (const auto& [p, c] : t.edges()) {
    E e{p, c, std::nullopt};
    if (pt[static_cast<std::size_t>(p)] != pt[static_cast<std::size_t>(c)]) e.seg = Segment(pt[static_cast<std::size_t>(p)], pt[static_cast<std::size_t>(c)]);
    edges.push_back(e);
  }

  for (const E& e : edges) {
    if (!e.seg) continue;
    for (int w = 0; w < n; ++w) {
      if (w == e.parent || w == e.child) continue;
      if (in_relative_interior(pt[static_cast<std::size_t>(w)], *e.seg)) out.violations.push_back({ViolationKind::VertexOnEdge, {w, e.child}});
    }
  }

  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      const E& e = edges[i];
      const E& f = edges[j];
      if (!e.seg || !f.seg) continue;
      const auto hit = segments_intersect(*e.seg, *f.seg);
      if (hit.kind == Contact::ProperCross) out.violations.push_back({ViolationKind::ProperCross, sorted_pair(e.child, f.child)});
      if (hit.kind == Contact::Overlap) out.violations.push_back({ViolationKind::Overlap, sorted_pair(e.child, f.child)});
      // Touch kinds are either a shared tree vertex, a duplicate position or
      // a vertex on an edge interior; the last two are reported above.
    }
  }

  const std::vector<Point> crossings = all_crossings(ls);
  for (int v = 0; v < n; ++v) {
    const Line& l = ls.line(asg.line_of[static_cast<std::size_t>(v)]);
    for (const Line& m : ls.lines()) {
      if (m.id != l.id && m.contains(pt[static_cast<std::size_t>(v)])) {
        out.warnings.push_back({WarningKind::VertexOnCrossing, {v}});
        break;
      }
    }
  }
  for (const E& e : edges) {
    if (!e.seg) continue;
    for (const Point& c : crossings) {
      if (in_relative_interior(c, *e.seg)) {
        out.warnings.push_back({WarningKind::EdgeThroughCrossing, {e.child}});
        break;
      }
    }
  }
  std::sort(out.violations.begin(), out.violations.end());
  std::sort(out.warnings.begin(), out.warnings.end());
  return out;
}

std::vector<Scalar> candidate_positions(const LineSet& ls, int line_id, int refine) {
  if (refine < 1) throw Error(Errc::InvalidArgument, "refine must be at least 1", {refine});
  std::vector<Scalar> xs;
  for (const Crossing& c : intersection_order(ls, line_id)) xs.push_back(c.at.x);
  if (xs.empty()) return {Scalar(0)};
  std::vector<Scalar> out = {xs.front() - 1};
  for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
    const Scalar step = (xs[i + 1] - xs[i]) / (refine + 1);
    for (int k = 1; k <= refine; ++k) out.push_back(xs[i] + step * k);
  }
  out.push_back(xs.back() + 1);
  return out;
}

namespace {

// Incremental placement state shared by the discrete and randomized phases.
class Placement {
 public:
  Placement(const LineSet& ls, const Tree& t, const Assignment& asg)
      : ls_(ls), t_(t), asg_(asg), crossings_(all_crossings(ls)),
        placed_(static_cast<std::size_t>(t.n()), 0), x_(static_cast<std::size_t>(t.n())),
        pt_(static_cast<std::size_t>(t.n())) {}

  bool placed(int v) const { return placed_[static_cast<std::size_t>(v)] != 0; }
  const Line& line_of(int v) const { return ls_.line(asg_.line_of[static_cast<std::size_t>(v)]); }

  /// Whether v may go to x given the vertices placed so far; v's parent must
  /// be placed unless v is the root.
  bool admissible(int v, const Scalar& x) const {
    const Point q = line_of(v).point_at(x);
    for (const Line& m : ls_.lines()) {
      if (m.id != line_of(v).id && m.contains(q)) return false;
    }
    for (int w : order_) {
      if (pt_[static_cast<std::size_t>(w)] == q) return false;
    }
    for (int c : edges_) {
      if (in_relative_interior(q, seg_[static_cast<std::size_t>(c)])) return false;
    }
    const int p = t_.parent(v);
    if (p < 0) return true;
    const Point& pp = pt_[static_cast<std::size_t>(p)];
    const Segment s(pp, q);
    for (int w : order_) {
      if (w != p && in_relative_interior(pt_[static_cast<std::size_t>(w)], s)) return false;
    }
    for (const Point& c : crossings_) {
      if (in_relative_interior(c, s)) return false;
    }
    for (int c : edges_) {
      const Segment& f = seg_[static_cast<std::size_t>(c)];
      const bool adjacent = c == p || t_.parent(c) == p;
      const auto hit = segments_intersect(s, f);
      if (adjacent ? hit.kind != Contact::TouchEndpoints : hit.kind != Contact::Disjoint) return false;
    }
    return true;
  }

  void place(int v, const Scalar& x) {
    const auto k = static_cast<std::size_t>(v);
    placed_[k] = 1;
    x_[k] = x;
    pt_[k] = line_of(v).point_at(x);
    order_.push_back(v);
    if (seg_.empty()) seg_.resize(placed_.size());
    const int p = t_.parent(v);
    if (p >= 0) {
      seg_[k] = Segment(pt_[static_cast<std::size_t>(p)], pt_[k]);
      edges_.push_back(v);
    }
  }

  void unplace(int v) {
    placed_[static_cast<std::size_t>(v)] = 0;
    order_.pop_back();
    if (t_.parent(v) >= 0) edges_.pop_back();
  }

  void clear() {
    while (!order_.empty()) unplace(order_.back());
  }

  Embedding embedding() const { return Embedding{x_}; }

 private:
  const LineSet& ls_;
  const Tree& t_;
  const Assignment& asg_;
  std::vector<Point> crossings_;
  std::vector<char> placed_;
  std::vector<Scalar> x_;
  std::vector<Point> pt_;
  std::vector<Segment> seg_;  // by child vertex
  std::vector<int> order_;    // placed vertices, in placement order
  std::vector<int> edges_;    // placed edges by child
};

class Backtracker {
 public:
  Backtracker(const LineSet& ls, const Tree& t, const Assignment& asg, const SolveOptions& opts)
      : t_(t), state_(ls, t, asg), limit_(opts.node_limit) {
    const auto bfs = t.bfs_order();
    rank_.assign(static_cast<std::size_t>(t.n()), 0);
    for (std::size_t i = 0; i < bfs.size(); ++i) rank_[static_cast<std::size_t>(bfs[i])] = static_cast<int>(i);
    cands_.resize(static_cast<std::size_t>(t.n()));
    for (int v = 0; v < t.n(); ++v) cands_[static_cast<std::size_t>(v)] = candidate_positions(ls, asg.line_of[static_cast<std::size_t>(v)], opts.refine);
  }

  bool run() { return recurse(0); }
  long long nodes() const { return nodes_; }
  bool hit_limit() const { return hit_limit_; }
  Embedding embedding() const { return state_.embedding(); }

 private:
  bool recurse(int depth) {
    if (depth == t_.n()) return true;
    if (++nodes_ > limit_) {
      hit_limit_ = true;
      return false;
    }
    // frontier vertex with the fewest admissible candidates, ties by BFS rank
    int best = -1;
    std::vector<Scalar> best_live;
    for (int v = 0; v < t_.n(); ++v) {
      if (state_.placed(v)) continue;
      const int p = t_.parent(v);
      if (p >= 0 && !state_.placed(p)) continue;
      std::vector<Scalar> live;
      for (const Scalar& x : cands_[static_cast<std::size_t>(v)]) {
        if (state_.admissible(v, x)) live.push_back(x);
      }
      if (live.empty()) return false;
      if (best < 0 || live.size() < best_live.size() ||
          (live.size() == best_live.size() && rank_[static_cast<std::size_t>(v)] < rank_[static_cast<std::size_t>(best)])) {
        best = v;
        best_live = std::move(live);
      }
    }
    for (const Scalar& x : best_live) {
      state_.place(best, x);
      if (recurse(depth + 1)) return true;
      state_.unplace(best);
      if (hit_limit_) return false;
    }
    return false;
  }

  const Tree& t_;
  Placement state_;
  long long limit_;
  long long nodes_ = 0;
  bool hit_limit_ = false;
  std::vector<int> rank_;
  std::vector<std::vector<Scalar>> cands_;
};

// A random rational in one of the n open intervals cut out of the line.
Scalar random_position(std::mt19937_64& rng, const std::vector<Scalar>& breaks) {
  constexpr long kGrid = 1L << 16;
  std::uniform_int_distribution<long> cell(1, kGrid - 1);
  if (breaks.empty()) return Scalar(cell(rng) - kGrid / 2, 64);
  std::uniform_int_distribution<std::size_t> pick(0, breaks.size());
  const std::size_t i = pick(rng);
  const Scalar width = breaks.size() > 1 ? Scalar(breaks.back() - breaks.front()) : Scalar(1);
  if (i == 0) return breaks.front() - width * Scalar(cell(rng), kGrid / 8);
  if (i == breaks.size()) return breaks.back() + width * Scalar(cell(rng), kGrid / 8);
  return breaks[i - 1] + (breaks[i] - breaks[i - 1]) * Scalar(cell(rng), kGrid);
}

}  // namespace

SolveResult solve(const LineSet& ls, const Tree& t, const Assignment& asg, const SolveOptions& opts) {
  asg.validate(t, ls);
  SolveResult res;
  std::optional<Embedding> emb;

  Backtracker bt(ls, t, asg, opts);
  if (bt.run()) emb = bt.embedding();
  res.nodes = bt.nodes();
  res.discrete_exhausted = !emb && !bt.hit_limit();

  if (!emb && opts.budget > 0) {
    std::mt19937_64 rng(opts.seed);
    std::vector<std::vector<Scalar>> breaks(static_cast<std::size_t>(t.n()));
    for (int v = 0; v < t.n(); ++v) {
      for (const Crossing& c : intersection_order(ls, asg.line_of[static_cast<std::size_t>(v)])) {
        breaks[static_cast<std::size_t>(v)].push_back(c.at.x);
      }
    }
    const std::vector<int> order = t.bfs_order();
    Placement state(ls, t, asg);
    for (long long r = 0; r < opts.budget && !emb; ++r) {
      ++res.restarts;
      state.clear();
      bool ok = true;
      for (int v : order) {
        bool placed = false;
        for (int attempt = 0; attempt < 64 && !placed; ++attempt) {
          const Scalar x = random_position(rng, breaks[static_cast<std::size_t>(v)]);
          if (state.admissible(v, x)) {
            state.place(v, x);
            placed = true;
          }
        }
        if (!placed) {
          ok = false;
          break;
        }
      }
      if (ok) emb = state.embedding();
    }
  }

  if (emb) {
    const EmbeddingVerdict v = check_embedding(ls, t, asg, *emb);
    if (!v.crossing_free() || !v.warnings.empty()) throw Error(Errc::Validation, "solver produced an invalid embedding");
    res.found = std::move(emb);
  }
  return res;
}

ScanReport scan_universality(const LineSet& ls, const Tree& t, const SolveOptions& opts, unsigned workers,
                             bool allow_large) {
  const int n = t.n();
  if (static_cast<std::size_t>(n) != ls.size()) {
    throw Error(Errc::SizeMismatch, "tree and line set sizes differ", {n, static_cast<int>(ls.size())});
  }
  if (n > 7 && !allow_large) throw Error(Errc::TooLarge, "scan over n! bijections refused for n > 7", {n});

  ScanReport report;
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  do {
    report.entries.push_back({perm, false, std::nullopt});
  } while (std::next_permutation(perm.begin(), perm.end()));

  if (!workers) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, report.entries.size()));
  std::atomic<std::size_t> next{0};
  auto job = [&] {
    for (std::size_t i = next++; i < report.entries.size(); i = next++) {
      ScanEntry& e = report.entries[i];
      SolveResult r = solve(ls, t, Assignment{e.line_of}, opts);
      e.found = r.found.has_value();
      e.embedding = std::move(r.found);
    }
  };
  if (workers == 1) {
    job();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(job);
    for (auto& th : threads) th.join();
  }
  for (const ScanEntry& e : report.entries) (e.found ? report.found : report.not_found) += 1;
  return report;
}

namespace {

struct RegionEvent {
  Scalar t;  // parameter along the segment, 0 at p
  RegionIndex region;
};

// Lines met by the closed segment, in order, with their regions.
std::vector<RegionEvent> region_events(const RegionAtlas& atlas, const Segment& s) {
  struct Hit {
    Scalar t;
    int line;
  };
  std::vector<Hit> hits;
  for (const Line& l : atlas.lines().lines()) {
    const Scalar fp = s.p.y - l.y_at(s.p.x);
    const Scalar fq = s.q.y - l.y_at(s.q.x);
    if (fp == 0 && fq == 0) throw Error(Errc::DegenerateContact, "segment runs along a line", {l.id});
    if (sgn(fp) * sgn(fq) > 0) continue;
    hits.push_back({fp / (fp - fq), l.id});
  }
  std::sort(hits.begin(), hits.end(), [](const Hit& a, const Hit& b) { return a.t < b.t; });
  for (std::size_t i = 1; i < hits.size(); ++i) {
    if (hits[i].t == hits[i - 1].t) {
      throw Error(Errc::DegenerateContact, "segment passes through a crossing", {hits[i - 1].line, hits[i].line});
    }
  }
  if (hits.empty() || hits.front().t != 0) throw Error(Errc::InvalidArgument, "segment does not start on a line");
  std::vector<RegionEvent> out;
  for (const Hit& h : hits) {
    const Scalar x = s.p.x + h.t * (s.q.x - s.p.x);
    out.push_back({h.t, atlas.region_of(h.line, x)});
  }
  return out;
}

struct Clip {
  bool empty = true;
  Scalar t0, t1;
  int enter = 0;  // label of the side crossed at t0 when t0 > 0
  int leave = 0;  // label of the side crossed at t1 when t1 < 1
};

// Cyrus-Beck clipping of the segment against a non-degenerate region hull.
Clip clip(const RegionHull& h, const Segment& s) {
  Clip c;
  c.t0 = 0;
  c.t1 = 1;
  bool tie0 = false, tie1 = false;
  for (const HullSide& side : h.sides) {
    const Scalar g0 = cross(side.direction, s.p - side.anchor);
    const Scalar g1 = cross(side.direction, s.q - side.anchor);
    if (g0 < 0 && g1 < 0) return c;
    if (g0 >= 0 && g1 >= 0) continue;
    const Scalar t = g0 / (g0 - g1);
    if (g0 < 0) {  // entering, t in (0, 1]
      if (c.enter == 0 || t > c.t0) {
        c.t0 = t;
        c.enter = side.label;
        tie0 = false;
      } else if (t == c.t0) {
        tie0 = true;
      }
    } else {  // leaving, t in [0, 1)
      if (c.leave == 0 || t < c.t1) {
        c.t1 = t;
        c.leave = side.label;
        tie1 = false;
      } else if (t == c.t1) {
        tie1 = true;
      }
    }
  }
  if (c.t0 > c.t1) return c;
  if (tie0 || tie1) throw Error(Errc::DegenerateContact, "segment crosses a region hull at a vertex");
  c.empty = false;
  return c;
}

}  // namespace

std::vector<CombTuple> comb_type(const RegionAtlas& atlas, const Segment& edge) {
  const std::vector<RegionEvent> events = region_events(atlas, edge);
  std::vector<CombTuple> out;
  for (const RegionEvent& e : events) {
    if (out.empty() || !(out.back().region == e.region)) out.push_back({e.region, 0, 0});
  }
  if (atlas.classes().c() == 1) return out;
  for (CombTuple& tup : out) {
    const RegionHull& h = atlas.hull(tup.region);
    if (h.degenerate) continue;
    const Clip c = clip(h, edge);
    if (c.empty) throw Error(Errc::Validation, "segment meets a region but misses its hull");
    tup.enter = c.t0 > 0 ? c.enter : 0;
    tup.leave = c.t1 < 1 ? c.leave : 0;
  }
  return out;
}

std::vector<int> color_type(const Tree& t, const Assignment& asg, const ColorClasses& cc, const std::vector<int>& path) {
  if (path.empty()) throw Error(Errc::NotAPath, "empty path");
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (path[i] < 0 || path[i] >= t.n()) throw Error(Errc::NotAPath, "vertex out of range", {path[i]});
    if (i > 0 && t.parent(path[i]) != path[i - 1]) throw Error(Errc::NotAPath, "consecutive vertices are not parent and child", {path[i - 1], path[i]});
  }
  std::vector<int> out;
  for (int v : path) out.push_back(cc.class_of(asg.line_of.at(static_cast<std::size_t>(v))));
  return out;
}

PathDescriptor path_descriptor(const RegionAtlas& atlas, const Tree& t, const Assignment& asg, const Embedding& emb,
                               const std::vector<std::vector<int>>& paths) {
  if (paths.empty()) throw Error(Errc::InvalidArgument, "no paths given");
  const LineSet& ls = atlas.lines();
  PathDescriptor out;
  for (std::size_t k = 0; k < paths.size(); ++k) {
    const auto& path = paths[k];
    color_type(t, asg, atlas.classes(), path);  // validates the path
    if (path.front() != paths.front().front()) throw Error(Errc::InvalidArgument, "paths start at different vertices");

    std::vector<Segment> segs;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) segs.emplace_back(emb.point(ls, asg, path[i]), emb.point(ls, asg, path[i + 1]));
    const Point start = emb.point(ls, asg, path.front());

    // visits: region, edge index and parameter of the first point in it
    struct Visit {
      RegionIndex region;
      std::size_t edge;
      Scalar t;
    };
    std::vector<Visit> visits = {{atlas.region_of(asg.line_of.at(static_cast<std::size_t>(path.front())), start.x), 0, Scalar(0)}};
    for (std::size_t i = 0; i < segs.size(); ++i) {
      for (const RegionEvent& e : region_events(atlas, segs[i])) {
        if (!(visits.back().region == e.region)) visits.push_back({e.region, i, e.t});
      }
    }

    std::vector<RegionIndex> regions;
    for (const Visit& v : visits) regions.push_back(v.region);
    if (k == 0) {
      out.visited = regions;
    } else if (regions != out.visited) {
      throw Error(Errc::NonUniform, "paths visit different region sequences", {static_cast<int>(k)});
    }

    auto at = [&](std::size_t edge, const Scalar& tt) {
      const Segment& s = segs[edge];
      return Point{s.p.x + tt * (s.q.x - s.p.x), s.p.y + tt * (s.q.y - s.p.y)};
    };
    std::vector<Point> entries = {start};
    for (std::size_t i = 1; i < visits.size(); ++i) {
      const Visit& v = visits[i];
      Point entry = at(v.edge, v.t);
      if (atlas.classes().c() > 1 && !atlas.hull(v.region).degenerate) {
        const RegionHull& h = atlas.hull(v.region);
        // walk back while the path stays inside the hull
        for (std::size_t e = v.edge + 1; e-- > 0;) {
          const Clip c = clip(h, segs[e]);
          if (c.empty || (e != v.edge && c.t1 < 1)) {
            entry = at(e + 1, Scalar(0));
            break;
          }
          if (c.t0 > 0) {
            entry = at(e, c.t0);
            break;
          }
          if (e == 0) entry = at(v.edge, v.t);  // inside since the start
        }
      }
      entries.push_back(entry);
    }
    out.entry_points.push_back(std::move(entries));
  }

  for (std::size_t i = 0; i < out.visited.size(); ++i) {
    std::vector<Point> pts;
    for (const auto& e : out.entry_points) pts.push_back(e[i]);
    out.doors.push_back(convex_hull(pts));
  }
  return out;
}

Tree build_theorem_tree(int d, int delta) {
  if (d < 1 || delta < 1) throw Error(Errc::InvalidArgument, "depth and arity must be positive", {d, delta});
  long long total = 0, level = 1;
  for (int k = 0; k <= d; ++k) {
    total += level;
    level *= delta;
    if (total > 5000000) throw Error(Errc::TooLarge, "theorem tree too large", {d, delta});
  }
  const int n = static_cast<int>(total - 1);
  if (n < 1) throw Error(Errc::InvalidArgument, "tree would be empty", {d, delta});
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back((v - 1) / delta, v);
  return Tree(n, std::move(edges), 0);
}

Assignment build_iota(const Tree& t, const LineSet& ls, const ColorClasses& cc, std::uint64_t seed) {
  if (static_cast<std::size_t>(t.n()) != ls.size() || cc.n() != t.n()) {
    throw Error(Errc::SizeMismatch, "tree, line set and classes must have the same size", {t.n(), static_cast<int>(ls.size()), cc.n()});
  }
  const int c = cc.c();
  std::mt19937_64 rng(seed);

  // class of each non-root vertex
  std::vector<int> cls(static_cast<std::size_t>(t.n()), 0);
  cls[static_cast<std::size_t>(t.root())] = 1;
  bool short_seen = false;  // only the parent of the removed leaf may be one short
  for (int v = 0; v < t.n(); ++v) {
    const auto& kids = t.children(v);
    const int k = static_cast<int>(kids.size());
    if (k == 0) continue;
    const bool short_one = k % c == c - 1 && c > 1 && !short_seen;
    short_seen = short_seen || short_one;
    if (k % c != 0 && !short_one) throw Error(Errc::DivisibilityError, "child count not divisible by the class count", {v, k, c});
    const int per = (k + (short_one ? 1 : 0)) / c;
    std::vector<int> pool;
    for (int q = 1; q <= c; ++q) {
      for (int i = 0; i < per - (short_one && q == 1 ? 1 : 0); ++i) pool.push_back(q);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    for (int i = 0; i < k; ++i) cls[static_cast<std::size_t>(kids[static_cast<std::size_t>(i)])] = pool[static_cast<std::size_t>(i)];
  }

  std::vector<std::vector<int>> lines(static_cast<std::size_t>(c + 1));
  for (int q = 1; q <= c; ++q) {
    for (int id = cc.first_id(q); id <= cc.last_id(q); ++id) {
      if (id != 1) lines[static_cast<std::size_t>(q)].push_back(id);
    }
    std::shuffle(lines[static_cast<std::size_t>(q)].begin(), lines[static_cast<std::size_t>(q)].end(), rng);
  }
  Assignment asg;
  asg.line_of.assign(static_cast<std::size_t>(t.n()), 0);
  asg.line_of[static_cast<std::size_t>(t.root())] = 1;
  for (int v : t.bfs_order()) {
    if (v == t.root()) continue;
    auto& bucket = lines[static_cast<std::size_t>(cls[static_cast<std::size_t>(v)])];
    if (bucket.empty()) throw Error(Errc::SizeMismatch, "class has fewer lines than vertices mapped to it", {cls[static_cast<std::size_t>(v)]});
    asg.line_of[static_cast<std::size_t>(v)] = bucket.back();
    bucket.pop_back();
  }
  asg.validate(t, ls);
  return asg;
}

}  // namespace treelines
