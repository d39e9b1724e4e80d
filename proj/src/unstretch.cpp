#include "treelines/unstretch.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <thread>

namespace treelines {

Real to_real(const Scalar& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

namespace {

void check_ids(const LineSet& ls, const std::vector<int>& ids) {
  if (ids.size() != 6) throw Error(Errc::InvalidArgument, "a frame needs exactly six lines", {static_cast<int>(ids.size())});
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] < 1 || ids[i] > static_cast<int>(ls.size())) throw Error(Errc::InvalidArgument, "line id out of range", {ids[i]});
    if (i > 0 && ids[i - 1] >= ids[i]) throw Error(Errc::InvalidArgument, "frame ids must increase", {ids[i - 1], ids[i]});
  }
}

std::vector<int> one_to_six() { return {1, 2, 3, 4, 5, 6}; }

}  // namespace

SixLineFrame explore_frame(const LineSet& ls, const std::vector<int>& ids) {
  check_ids(ls, ids);
  SixLineFrame f;
  f.lines = ls.subset(ids);
  f.source_ids = ids;
  f.kind = classify_cap_cup(f.lines);
  return f;
}

SixLineFrame validate_frame(const LineSet& ls, const std::vector<int>& ids) {
  SixLineFrame f = explore_frame(ls, ids);
  if (!span_is_acute(f.lines, one_to_six())) throw Error(Errc::SpanTooWide, "extreme lines are at least a right angle apart");
  if (auto lower = doubling_violation(f.lines, one_to_six(), DoublingVariant::Lower)) {
    if (doubling_violation(f.lines, one_to_six(), DoublingVariant::Upper)) {
      throw Error(Errc::NotDoubling, "doubling inequality fails at j = " + std::to_string(*lower), {*lower});
    }
    f.variant = DoublingVariant::Upper;
  } else {
    f.variant = DoublingVariant::Lower;
  }
  if (f.kind == CapCup::Neither) throw Error(Errc::NotCapOrCup, "frame lines form neither a cap nor a cup");
  f.checked = true;
  return f;
}

const char* to_string(FrameSymmetry m) {
  switch (m) {
    case FrameSymmetry::Identity: return "identity";
    case FrameSymmetry::MirrorX: return "mirror-x";
    case FrameSymmetry::MirrorY: return "mirror-y";
    case FrameSymmetry::HalfTurn: return "half-turn";
  }
  return "";
}

Point apply(FrameSymmetry m, const Point& p) {
  switch (m) {
    case FrameSymmetry::Identity: return p;
    case FrameSymmetry::MirrorX: return {-p.x, p.y};
    case FrameSymmetry::MirrorY: return {p.x, -p.y};
    case FrameSymmetry::HalfTurn: return {-p.x, -p.y};
  }
  return p;
}

// y = s x - b under each map.
Line apply(FrameSymmetry m, const Line& l) {
  switch (m) {
    case FrameSymmetry::Identity: return l;
    case FrameSymmetry::MirrorX: return {-l.slope, l.dual_offset, l.id};
    case FrameSymmetry::MirrorY: return {-l.slope, -l.dual_offset, l.id};
    case FrameSymmetry::HalfTurn: return {l.slope, -l.dual_offset, l.id};
  }
  return l;
}

CanonicalFrame canonical_frame(const SixLineFrame& frame) {
  if (!frame.checked || !frame.variant) throw Error(Errc::InvalidArgument, "canonical_frame needs a validated frame");
  const bool upper = *frame.variant == DoublingVariant::Upper;
  CanonicalFrame out;
  if (frame.kind == CapCup::Cap) {
    out.map = upper ? FrameSymmetry::MirrorX : FrameSymmetry::Identity;
  } else {
    out.map = upper ? FrameSymmetry::MirrorY : FrameSymmetry::HalfTurn;
  }
  std::vector<Line> lines;
  for (const Line& l : frame.lines.lines()) lines.push_back(apply(out.map, l));
  const LineSet moved = verify_general_position(std::move(lines));
  out.frame = validate_frame(moved, one_to_six());
  if (out.frame.kind != CapCup::Cap || out.frame.variant != DoublingVariant::Lower) {
    throw Error(Errc::Validation, "symmetry did not produce a cap, lower frame");
  }
  for (int k = 1; k <= 6; ++k) {
    out.frame.source_ids[static_cast<std::size_t>(k - 1)] =
        frame.source_ids[static_cast<std::size_t>(moved.input_label(k) - 1)];
  }
  return out;
}

TripleEdgeConfig config_from_x(const SixLineFrame& frame, const std::array<Scalar, 3>& a_x,
                               const std::array<Scalar, 3>& c_x) {
  TripleEdgeConfig cfg;
  for (int j = 1; j <= 3; ++j) {
    const auto k = static_cast<std::size_t>(j - 1);
    cfg.A[k] = frame.line(2 * j).point_at(a_x[k]);
    cfg.C[k] = frame.line(2 * j - 1).point_at(c_x[k]);
  }
  return cfg;
}

std::string ConfigVerdict::describe() const {
  static const char* names[] = {"", "(i)", "(ii)", "(iii)"};
  switch (kind) {
    case Valid: return "valid";
    case Violation: return std::string("violates ") + names[property] + " at edge " + std::to_string(edge);
    case MissingCrossing: return "missing crossing for (iii) at edge " + std::to_string(edge);
  }
  return "";
}

std::vector<Point> frame_crossings(const SixLineFrame& frame) {
  std::vector<Point> pts;
  for (int i = 1; i <= 6; ++i) {
    for (int j = i + 1; j <= 6; ++j) pts.push_back(line_intersection(frame.line(i), frame.line(j)));
  }
  return pts;
}

namespace {

bool segment_meets_polygon(const Segment& s, const std::vector<Point>& poly) {
  if (in_convex_polygon(s.p, poly) || in_convex_polygon(s.q, poly)) return true;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Segment edge(poly[i], poly[(i + 1) % poly.size()]);
    if (segments_intersect(s, edge).kind != Contact::Disjoint) return true;
  }
  return false;
}

// Point where line l meets the closed segment s, if it does.
std::optional<Point> line_meets_segment(const Line& l, const Segment& s) {
  const Scalar fp = s.p.y - l.y_at(s.p.x);
  const Scalar fq = s.q.y - l.y_at(s.q.x);
  if (sgn(fp) * sgn(fq) > 0) return std::nullopt;
  if (fp == fq) return std::nullopt;  // segment lies on l
  const Scalar t = fp / (fp - fq);
  return Point{s.p.x + t * (s.q.x - s.p.x), s.p.y + t * (s.q.y - s.p.y)};
}

}  // namespace

ConfigVerdict validate_config(const SixLineFrame& frame, const TripleEdgeConfig& cfg, unsigned checks) {
  for (int j = 1; j <= 3; ++j) {
    const auto k = static_cast<std::size_t>(j - 1);
    if (!frame.line(2 * j).contains(cfg.A[k]) || !frame.line(2 * j - 1).contains(cfg.C[k])) {
      throw Error(Errc::InvalidArgument, "edge endpoint is not on its line", {j});
    }
    if (cfg.A[k] == cfg.C[k]) throw Error(Errc::InvalidArgument, "edge has coinciding endpoints", {j});
  }

  if (checks & CheckBelow) {
    for (int j = 1; j <= 3; ++j) {
      const auto k = static_cast<std::size_t>(j - 1);
      const Point apex = line_intersection(frame.line(2 * j), frame.line(2 * j - 1));
      const Point& a = cfg.A[k];
      const Point& c = cfg.C[k];
      bool ok = false;
      if (a.x != c.x && std::min(a.x, c.x) <= apex.x && apex.x <= std::max(a.x, c.x)) {
        const Scalar y = a.y + (c.y - a.y) * (apex.x - a.x) / (c.x - a.x);
        ok = j == 2 ? y > apex.y : y < apex.y;
      }
      if (!ok) return {ConfigVerdict::Violation, 1, j};
    }
  }

  if (checks & CheckHull) {
    const std::vector<Point> pts = frame_crossings(frame);
    const std::vector<Point> hull = convex_hull(pts);
    for (int j = 1; j <= 3; ++j) {
      if (segment_meets_polygon(cfg.edge(j), hull)) return {ConfigVerdict::Violation, 2, j};
    }
  }

  if (checks & CheckBetween) {
    for (int j = 1; j <= 3; ++j) {
      const auto k = static_cast<std::size_t>(j - 1);
      const int next = j % 3 + 1;
      const Line& l = frame.line(2 * j);
      const auto y = line_meets_segment(l, cfg.edge(next));
      if (!y) return {ConfigVerdict::MissingCrossing, 3, j};
      const Point apex = line_intersection(l, frame.line(2 * j - 1));
      // both points are on l, so betweenness reduces to x
      const Scalar& x = cfg.A[k].x;
      if (!(std::min(apex.x, y->x) <= x && x <= std::max(apex.x, y->x))) return {ConfigVerdict::Violation, 3, j};
    }
  }
  return {};
}

ChainValues derive_chain(const SixLineFrame& frame, const TripleEdgeConfig& cfg) {
  for (int j = 1; j <= 3; ++j) {
    if (!frame.line(2 * j).contains(cfg.A[static_cast<std::size_t>(j - 1)])) {
      throw Error(Errc::InvalidArgument, "edge endpoint is not on its line", {j});
    }
  }
  ChainValues cv;
  const Real pi = boost::multiprecision::default_ops::get_constant_pi<Real::backend_type>();
  Real sum = 0;
  for (int j = 2; j <= 6; ++j) {
    Real gap = boost::multiprecision::atan(to_real(frame.line(j).slope)) -
               boost::multiprecision::atan(to_real(frame.line(j - 1).slope));
    Real half = pi / 2;
    if (gap > half) gap = pi - gap;
    cv.alpha[static_cast<std::size_t>(j - 1)] = gap;
    sum += gap;
  }
  cv.alpha[0] = pi - sum;

  auto dist = [](const Point& p, const Point& q) -> Real {
    const Scalar dx = p.x - q.x, dy = p.y - q.y;
    return boost::multiprecision::sqrt(to_real(Scalar(dx * dx + dy * dy)));
  };
  std::array<Point, 3> B;
  for (int j = 1; j <= 3; ++j) {
    const int next = j % 3 + 1;
    B[static_cast<std::size_t>(j - 1)] = line_intersection(frame.line(2 * j), frame.line(2 * next));
  }
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t prev = (k + 2) % 3;
    const std::size_t next = (k + 1) % 3;
    cv.a[k] = dist(cfg.A[k], B[k]);
    cv.b[k] = dist(B[k], cfg.A[prev]);
    cv.r[k] = dist(B[k], B[next]);
  }
  return cv;
}

namespace {

bool le_tol(const Real& x, const Real& y) {
  const Real scale = std::max(abs(x), abs(y));
  return x <= y + scale * Real("1e-40");
}

}  // namespace

std::string ChainCheck::describe() const {
  switch (kind) {
    case Contradiction: return "contradiction (b1 - r3 <= a3)";
    case Consistent: return "consistent (b1 - r3 > a3)";
    case Indeterminate: return "indeterminate (within guard band)";
    case HypothesisFail: return "hypothesis fails (sines not ordered)";
  }
  return "";
}

ChainCheck lemma24_check(const ChainValues& cv) {
  std::array<Real, 7> s;  // s[1..6]
  for (std::size_t j = 0; j < 6; ++j) s[j + 1] = boost::multiprecision::sin(cv.alpha[j]);

  ChainCheck out;
  const bool descending =
      le_tol(s[6], s[5]) && le_tol(s[5], s[4]) && le_tol(s[4], s[3]) && le_tol(s[3], s[2]) && le_tol(s[2], s[1]);
  const bool ascending =
      le_tol(s[2], s[3]) && le_tol(s[3], s[4]) && le_tol(s[4], s[5]) && le_tol(s[5], s[6]) && le_tol(s[6], s[1]);
  out.descending = descending;

  const Real b3 = s[6] / s[5] * cv.a[2];
  const Real a2 = b3 - cv.r[1];
  const Real b2 = s[4] / s[3] * a2;
  const Real a1 = b2 - cv.r[0];
  out.b1 = s[2] / s[1] * a1;
  out.lhs = out.b1 - cv.r[2];
  out.rhs = cv.a[2];

  if (!descending && !ascending) {
    out.kind = ChainCheck::HypothesisFail;
    return out;
  }
  const Real diff = out.lhs - out.rhs;
  const Real scale = std::max(abs(out.lhs), abs(out.rhs));
  if (abs(diff) <= scale * Real("1e-9")) out.kind = ChainCheck::Indeterminate;
  else out.kind = diff < 0 ? ChainCheck::Contradiction : ChainCheck::Consistent;
  return out;
}

std::pair<std::array<Real, 3>, std::array<Real, 3>> ratio_factors(const ChainValues& cv) {
  std::array<Real, 7> s;
  for (std::size_t j = 0; j < 6; ++j) s[j + 1] = boost::multiprecision::sin(cv.alpha[j]);
  return {{s[2] / s[1], s[4] / s[3], s[6] / s[5]}, {s[6] / s[1], s[2] / s[3], s[4] / s[5]}};
}

namespace {

// Double-precision picture of a frame, used only to discard samples that
// violate a property by a clear margin.
struct FastFrame {
  std::array<double, 6> s{}, b{};
  std::array<double, 3> apex_x{}, apex_y{};
  std::vector<std::array<double, 2>> hull;
  std::vector<std::array<double, 3>> facets;  // unit outward normal and offset
  double diameter = 1;

  double y(int line, double x) const { return s[static_cast<std::size_t>(line)] * x - b[static_cast<std::size_t>(line)]; }
};

FastFrame make_fast(const SixLineFrame& frame) {
  FastFrame f;
  for (int i = 0; i < 6; ++i) {
    f.s[static_cast<std::size_t>(i)] = frame.line(i + 1).slope.get_d();
    f.b[static_cast<std::size_t>(i)] = frame.line(i + 1).dual_offset.get_d();
  }
  for (int j = 1; j <= 3; ++j) {
    const Point apex = line_intersection(frame.line(2 * j), frame.line(2 * j - 1));
    f.apex_x[static_cast<std::size_t>(j - 1)] = apex.x.get_d();
    f.apex_y[static_cast<std::size_t>(j - 1)] = apex.y.get_d();
  }
  for (const Point& p : convex_hull(frame_crossings(frame))) f.hull.push_back({p.x.get_d(), p.y.get_d()});
  double diam = 0;
  for (const auto& p : f.hull) {
    for (const auto& q : f.hull) diam = std::max(diam, std::hypot(p[0] - q[0], p[1] - q[1]));
  }
  f.diameter = diam > 0 ? diam : 1;
  for (std::size_t i = 0; i < f.hull.size(); ++i) {
    const auto& p = f.hull[i];
    const auto& q = f.hull[(i + 1) % f.hull.size()];
    double nx = q[1] - p[1], ny = -(q[0] - p[0]);
    const double len = std::hypot(nx, ny);
    nx /= len;
    ny /= len;
    f.facets.push_back({nx, ny, nx * p[0] + ny * p[1]});
  }
  return f;
}

struct Sample {
  std::array<double, 6> u{};  // log10 distances from the apex, in units of the diameter
};

struct Endpoints {
  std::array<double, 3> ax{}, cx{};
};

Endpoints place(const FastFrame& f, const Sample& smp) {
  Endpoints e;
  for (std::size_t k = 0; k < 3; ++k) {
    const double da = f.diameter * std::pow(10.0, smp.u[2 * k]);
    const double dc = f.diameter * std::pow(10.0, smp.u[2 * k + 1]);
    // (i) holds exactly iff A and C sit on opposite sides of the apex:
    // A left for the edges passing below, right for the one passing above.
    const bool below = k != 1;
    e.ax[k] = below ? f.apex_x[k] - da : f.apex_x[k] + da;
    e.cx[k] = below ? f.apex_x[k] + dc : f.apex_x[k] - dc;
  }
  return e;
}

// Sum of scaled violation amounts of (ii) and (iii); 0 when satisfied in
// double precision.
double penalty(const FastFrame& f, const Endpoints& e, unsigned checks) {
  double pen = 0;
  std::array<double, 3> axp{}, ayp{}, cxp{}, cyp{};
  for (std::size_t k = 0; k < 3; ++k) {
    axp[k] = e.ax[k];
    ayp[k] = f.y(static_cast<int>(2 * k + 1), e.ax[k]);
    cxp[k] = e.cx[k];
    cyp[k] = f.y(static_cast<int>(2 * k), e.cx[k]);
  }
  const double scale = f.diameter;

  if (checks & CheckBetween) {
    for (std::size_t k = 0; k < 3; ++k) {
      const std::size_t n = (k + 1) % 3;
      const int hi = static_cast<int>(2 * k + 1);
      const double fa = ayp[n] - f.y(hi, axp[n]);
      const double fc = cyp[n] - f.y(hi, cxp[n]);
      if ((fa > 0 && fc > 0) || (fa < 0 && fc < 0)) {
        pen += std::min(std::abs(fa), std::abs(fc)) / (1 + std::abs(f.s[static_cast<std::size_t>(hi)])) / scale;
        continue;
      }
      const double den = fa - fc;
      const double t = den == 0 ? 0 : fa / den;
      const double yx = axp[n] + t * (cxp[n] - axp[n]);
      const double dir = k != 1 ? -1.0 : 1.0;  // side of the apex A_k lies on
      const double pa = (axp[k] - f.apex_x[k]) * dir;
      const double py = (yx - f.apex_x[k]) * dir;
      if (py < pa) pen += (pa - py) / scale;
    }
  }

  if (checks & CheckHull) {
    for (std::size_t k = 0; k < 3; ++k) {
      double sep = -std::numeric_limits<double>::infinity();
      for (const auto& fc : f.facets) {
        const double pa = fc[0] * axp[k] + fc[1] * ayp[k] - fc[2];
        const double pc = fc[0] * cxp[k] + fc[1] * cyp[k] - fc[2];
        sep = std::max(sep, std::min(pa, pc));
      }
      double mx = -(cyp[k] - ayp[k]), my = cxp[k] - axp[k];
      const double len = std::hypot(mx, my);
      if (len > 0) {
        mx /= len;
        my /= len;
        const double base = mx * axp[k] + my * ayp[k];
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (const auto& v : f.hull) {
          const double p = mx * v[0] + my * v[1] - base;
          lo = std::min(lo, p);
          hi = std::max(hi, p);
        }
        sep = std::max(sep, std::max(lo, -hi));
      }
      if (sep < 0) pen += -sep / scale;
    }
  }
  return pen;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr double kPrefilterSlack = 1e-7;
constexpr double kLogSpan = 4.0;

struct WorkerResult {
  std::optional<TripleEdgeConfig> found;
  long long evaluated = 0;
  long long exact_checks = 0;
};

class Worker {
 public:
  Worker(const SixLineFrame& frame, const FastFrame& fast, unsigned checks, std::uint64_t seed)
      : frame_(frame), fast_(fast), checks_(checks), rng_(seed) {}

  // Returns true when an exactly valid configuration was found.
  bool evaluate(const Sample& smp, double& pen) {
    ++out.evaluated;
    const Endpoints e = place(fast_, smp);
    pen = penalty(fast_, e, checks_);
    if (pen > kPrefilterSlack) return false;
    ++out.exact_checks;
    std::array<Scalar, 3> ax, cx;
    for (std::size_t k = 0; k < 3; ++k) {
      ax[k] = Scalar(e.ax[k]);
      cx[k] = Scalar(e.cx[k]);
    }
    TripleEdgeConfig cfg = config_from_x(frame_, ax, cx);
    try {
      if (!validate_config(frame_, cfg, checks_).valid()) return false;
    } catch (const Error&) {
      return false;
    }
    out.found = std::move(cfg);
    return true;
  }

  void run(long long budget, double local_fraction, const std::atomic<unsigned>& stop_below, unsigned index) {
    const long long global = static_cast<long long>(static_cast<double>(budget) * (1 - local_fraction));
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    constexpr long long kBatch = 1024;
    double best_pen = std::numeric_limits<double>::infinity();
    Sample best{};

    // Latin-hypercube batches over the six log-distances.
    std::array<std::vector<int>, 6> strata;
    for (long long done = 0; done < global;) {
      const long long n = std::min(kBatch, global - done);
      for (auto& st : strata) {
        st.resize(static_cast<std::size_t>(n));
        std::iota(st.begin(), st.end(), 0);
        std::shuffle(st.begin(), st.end(), rng_);
      }
      for (long long i = 0; i < n; ++i) {
        Sample smp;
        for (std::size_t d = 0; d < 6; ++d) {
          const double cell = (strata[d][static_cast<std::size_t>(i)] + unit(rng_)) / static_cast<double>(n);
          smp.u[d] = -kLogSpan + 2 * kLogSpan * cell;
        }
        double pen = 0;
        if (evaluate(smp, pen)) return;
        if (pen < best_pen) best_pen = pen, best = smp;
      }
      done += n;
      if (stop_below.load(std::memory_order_relaxed) < index) return;
    }

    // Hill climbing on the penalty from the best global sample, with
    // random restarts once progress stalls.
    std::normal_distribution<double> step(0.0, 1.0);
    long long remaining = budget - global;
    Sample cur = best;
    double cur_pen = best_pen;
    double sigma = 0.5;
    int stall = 0;
    while (remaining-- > 0) {
      if (stall > 200 || !std::isfinite(cur_pen)) {
        for (auto& u : cur.u) u = -kLogSpan + 2 * kLogSpan * unit(rng_);
        if (evaluate(cur, cur_pen)) return;
        sigma = 0.5;
        stall = 0;
        continue;
      }
      Sample cand = cur;
      for (auto& u : cand.u) u = std::clamp(u + sigma * step(rng_), -kLogSpan, kLogSpan);
      double pen = 0;
      if (evaluate(cand, pen)) return;
      if (pen < cur_pen) {
        cur = cand;
        cur_pen = pen;
        stall = 0;
      } else {
        ++stall;
        sigma = std::max(1e-3, sigma * 0.98);
      }
      if ((remaining & 1023) == 0 && stop_below.load(std::memory_order_relaxed) < index) return;
    }
  }

  WorkerResult out;

 private:
  const SixLineFrame& frame_;
  const FastFrame& fast_;
  unsigned checks_;
  std::mt19937_64 rng_;
};

}  // namespace

SearchReport feasibility_search(const SixLineFrame& frame, const SearchOptions& opts) {
  if (opts.samples < 0) throw Error(Errc::InvalidArgument, "negative sample budget");
  const FastFrame fast = make_fast(frame);
  // The budget is cut into a fixed number of seeded shards so the result
  // does not depend on how many threads run them.
  const unsigned shards = static_cast<unsigned>(std::clamp<long long>(opts.samples, 1, 64));
  unsigned workers = opts.workers ? opts.workers : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min(workers, shards);

  std::vector<Worker> pool;
  pool.reserve(shards);
  for (unsigned w = 0; w < shards; ++w) pool.emplace_back(frame, fast, opts.checks, splitmix(opts.seed ^ splitmix(w + 1)));

  std::atomic<unsigned> first_found{shards};
  std::atomic<unsigned> next_shard{0};
  auto job = [&] {
    for (unsigned w = next_shard++; w < shards; w = next_shard++) {
      if (first_found.load() < w) continue;
      const long long share = opts.samples / shards + (w < opts.samples % shards ? 1 : 0);
      pool[w].run(share, opts.local_fraction, first_found, w);
      if (pool[w].out.found) {
        unsigned cur = first_found.load();
        while (w < cur && !first_found.compare_exchange_weak(cur, w)) {
        }
      }
    }
  };
  if (workers == 1) {
    job();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(job);
    for (auto& t : threads) t.join();
  }

  SearchReport report;
  for (unsigned w = 0; w < shards; ++w) {
    report.evaluated += pool[w].out.evaluated;
    report.exact_checks += pool[w].out.exact_checks;
  }
  for (unsigned w = 0; w < shards; ++w) {
    if (pool[w].out.found) {
      report.found = pool[w].out.found;
      break;
    }
  }
  return report;
}

}  // namespace treelines
