// Python bindings. Rationals travel as fractions.Fraction; ints and "p/q"
// strings are accepted on input, floats are rejected.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "treelines/io.hpp"
#include "treelines/ramsey.hpp"
#include "treelines/svg.hpp"
#include "treelines/tree_embed.hpp"
#include "treelines/unstretch.hpp"

namespace py = pybind11;
using namespace treelines;

namespace {

Scalar to_scalar(const py::handle& h) {
  if (py::isinstance<py::bool_>(h)) throw Error(Errc::InvalidArgument, "expected a rational, got bool");
  if (py::isinstance<py::int_>(h)) return parse_scalar(py::str(h).cast<std::string>());
  if (py::isinstance<py::str>(h)) return parse_scalar(h.cast<std::string>());
  if (py::hasattr(h, "numerator") && py::hasattr(h, "denominator") && !py::isinstance<py::float_>(h)) {
    Scalar q(mpz_class(py::str(h.attr("numerator")).cast<std::string>()),
             mpz_class(py::str(h.attr("denominator")).cast<std::string>()));
    q.canonicalize();
    return q;
  }
  throw Error(Errc::InvalidArgument, "expected int, Fraction or 'p/q' string; floats are not exact");
}

py::object to_fraction(const Scalar& q) {
  // leaked on purpose: must outlive interpreter teardown
  static auto* fraction = new py::object(py::module_::import("fractions").attr("Fraction"));
  return (*fraction)(to_string(q));
}

py::tuple to_py(const Point& p) { return py::make_tuple(to_fraction(p.x), to_fraction(p.y)); }

Point to_point(const py::handle& h) {
  auto seq = h.cast<py::sequence>();
  if (seq.size() != 2) throw Error(Errc::InvalidArgument, "a point has two coordinates");
  return {to_scalar(seq[0]), to_scalar(seq[1])};
}

LineSet make_lines(const py::sequence& rows) {
  std::vector<Line> lines;
  int k = 0;
  for (const auto& row : rows) {
    auto r = row.cast<py::sequence>();
    if (r.size() != 2) throw Error(Errc::InvalidArgument, "each line is (slope, offset)");
    lines.push_back({to_scalar(r[0]), to_scalar(r[1]), ++k});
  }
  return verify_general_position(std::move(lines));
}

Embedding make_embedding(const py::sequence& xs) {
  Embedding e;
  for (const auto& x : xs) e.x.push_back(to_scalar(x));
  return e;
}

py::list fractions(const std::vector<Scalar>& xs) {
  py::list out;
  for (const Scalar& x : xs) out.append(to_fraction(x));
  return out;
}

SolveOptions solve_options(int refine, long long budget, std::uint64_t seed, long long node_limit) {
  SolveOptions o;
  o.refine = refine;
  o.budget = budget;
  o.seed = seed;
  o.node_limit = node_limit;
  return o;
}

}  // namespace

PYBIND11_MODULE(_treelines, m) {
  m.doc() = "Exact geometry for trees embedded on lines";

  static py::exception<Error> exc(m, "TreelinesError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetString(exc.ptr(), (std::string(errc_name(e.code())) + ": " + e.what()).c_str());
    }
  });

  py::class_<LineSet>(m, "LineSet")
      .def(py::init(&make_lines), py::arg("lines"),
           "Lines y = slope * x - offset given as (slope, offset) pairs; re-indexed 1..n by slope.")
      .def("__len__", &LineSet::size)
      .def("line", [](const LineSet& ls, int id) {
        const Line& l = ls.line(id);
        return py::make_tuple(to_fraction(l.slope), to_fraction(l.dual_offset));
      })
      .def("input_label", [](const LineSet& ls, int id) { return ls.input_label(id) - 1; },
           "0-based position of line `id` in the constructor's input")
      .def("intersection_order", [](const LineSet& ls, int id) {
        py::list out;
        for (const Crossing& c : intersection_order(ls, id)) out.append(py::make_tuple(c.partner, to_py(c.at)));
        return out;
      });

  py::class_<Tree>(m, "Tree")
      .def(py::init<int, std::vector<std::pair<int, int>>, int>(), py::arg("n"), py::arg("edges"), py::arg("root") = 0)
      .def_property_readonly("n", &Tree::n)
      .def_property_readonly("edges", &Tree::edges)
      .def("parent", &Tree::parent)
      .def("children", &Tree::children);

  m.def("classify_cap_cup", [](const LineSet& ls) { return std::string(to_string(classify_cap_cup(ls))); });
  m.def("longest_cap_cup", [](const LineSet& ls) {
    CapCupSubset s = longest_cap_cup(ls);
    return py::make_tuple(std::string(to_string(s.kind)), s.ids);
  });
  m.def("erdos_szekeres_bound", &erdos_szekeres_bound);
  m.def("extract_monotone_gaps", [](const LineSet& ls) {
    MonotoneGapChain c = extract_monotone_gaps(ls);
    return py::make_tuple(std::string(to_string(c.direction)), c.ids);
  });
  m.def("extract_doubling", [](const LineSet& ls) {
    DoublingChain c = extract_doubling(ls);
    return py::make_tuple(std::string(to_string(c.variant)), c.ids);
  });

  m.def("winding_number", [](const py::sequence& polyline, const py::handle& origin, const py::handle& direction) {
    std::vector<Point> pts;
    for (const auto& p : polyline) pts.push_back(to_point(p));
    const Point o = to_point(origin), d = to_point(direction);
    return winding_number(pts, Ray(o, Vec2{d.x, d.y}));
  }, py::arg("polyline"), py::arg("origin"), py::arg("direction"));

  m.def("check_embedding", [](const LineSet& ls, const Tree& t, const std::vector<int>& line_of, const py::sequence& xs) {
    const EmbeddingVerdict v = check_embedding(ls, t, Assignment{line_of}, make_embedding(xs));
    py::list violations, warnings;
    for (const Violation& x : v.violations) violations.append(py::make_tuple(std::string(to_string(x.kind)), x.witness));
    for (const Warning& x : v.warnings) warnings.append(py::make_tuple(std::string(to_string(x.kind)), x.witness));
    py::dict out;
    out["crossing_free"] = v.crossing_free();
    out["violations"] = violations;
    out["warnings"] = warnings;
    return out;
  }, py::arg("lines"), py::arg("tree"), py::arg("line_of"), py::arg("x"));

  m.def("solve", [](const LineSet& ls, const Tree& t, const std::vector<int>& line_of, int refine, long long budget,
                    std::uint64_t seed, long long node_limit) -> py::object {
    SolveResult r;
    {
      py::gil_scoped_release release;
      r = solve(ls, t, Assignment{line_of}, solve_options(refine, budget, seed, node_limit));
    }
    if (!r.found) return py::none();
    return fractions(r.found->x);
  }, py::arg("lines"), py::arg("tree"), py::arg("line_of"), py::arg("refine") = 2, py::arg("budget") = 1000,
     py::arg("seed") = 1, py::arg("node_limit") = 2000000,
     "x-coordinates of a verified crossing-free embedding, or None when the budget runs out.");

  m.def("scan_universality", [](const LineSet& ls, const Tree& t, int refine, long long budget, std::uint64_t seed,
                                unsigned workers, bool allow_large) {
    ScanReport rep;
    {
      py::gil_scoped_release release;
      rep = scan_universality(ls, t, solve_options(refine, budget, seed, 2000000), workers, allow_large);
    }
    py::list missing;
    for (const ScanEntry& e : rep.entries) {
      if (!e.found) missing.append(e.line_of);
    }
    py::dict out;
    out["found"] = rep.found;
    out["not_found"] = rep.not_found;
    out["missing"] = missing;
    return out;
  }, py::arg("lines"), py::arg("tree"), py::arg("refine") = 2, py::arg("budget") = 1000, py::arg("seed") = 1,
     py::arg("workers") = 0, py::arg("allow_large") = false);

  m.def("region_hulls", [](const LineSet& ls, int c) {
    RegionAtlas atlas(ls, ColorClasses(static_cast<int>(ls.size()), c));
    py::list out;
    if (c == 1) return out;
    for (const RegionIndex& r : atlas.regions()) {
      const RegionHull& h = atlas.hull(r);
      py::list verts;
      for (const Point& p : h.vertices) verts.append(to_py(p));
      py::dict d;
      d["region"] = py::make_tuple(r.a, r.b);
      d["sides"] = h.side_count();
      d["bounded"] = h.bounded();
      d["vertices"] = verts;
      out.append(d);
    }
    return out;
  }, py::arg("lines"), py::arg("c"));

  m.def("comb_type", [](const LineSet& ls, int c, const py::handle& p, const py::handle& q) {
    RegionAtlas atlas(ls, ColorClasses(static_cast<int>(ls.size()), c));
    py::list out;
    for (const CombTuple& t : comb_type(atlas, Segment(to_point(p), to_point(q)))) {
      out.append(py::make_tuple(t.region.a, t.region.b, t.enter, t.leave));
    }
    return out;
  }, py::arg("lines"), py::arg("c"), py::arg("p"), py::arg("q"));

  m.def("unstretch_search", [](const LineSet& ls, long long samples, std::uint64_t seed, unsigned checks,
                               unsigned workers) {
    const SixLineFrame frame = validate_frame(ls, {1, 2, 3, 4, 5, 6});
    const CanonicalFrame canon = canonical_frame(frame);
    SearchOptions o;
    o.samples = samples;
    o.seed = seed;
    o.checks = checks;
    o.workers = workers;
    SearchReport rep;
    {
      py::gil_scoped_release release;
      rep = feasibility_search(canon.frame, o);
    }
    py::dict out;
    out["kind"] = std::string(to_string(frame.kind));
    out["variant"] = std::string(to_string(*frame.variant));
    out["symmetry"] = std::string(to_string(canon.map));
    out["evaluated"] = rep.evaluated;
    if (rep.found) {
      py::list edges;
      for (int j = 0; j < 3; ++j) {
        edges.append(py::make_tuple(to_py(apply(canon.map, rep.found->A[static_cast<std::size_t>(j)])),
                                    to_py(apply(canon.map, rep.found->C[static_cast<std::size_t>(j)]))));
      }
      out["found"] = edges;
      const ChainCheck chk = lemma24_check(derive_chain(canon.frame, *rep.found));
      out["chain"] = chk.describe();
    } else {
      out["found"] = py::none();
    }
    return out;
  }, py::arg("lines"), py::arg("samples") = 1000000, py::arg("seed") = 42, py::arg("checks") = 7u,
     py::arg("workers") = 0u);

  m.def("parse_instance", [](const std::string& text) {
    Instance in = parse_instance(text);
    py::dict out;
    out["lines"] = in.lines;
    out["tree"] = in.tree ? py::cast(*in.tree) : py::none();
    out["line_of"] = in.assign ? py::cast(in.assign->line_of) : py::none();
    return out;
  });

  m.def("render_svg", [](const LineSet& ls, int c, const py::object& tree, const py::object& line_of,
                         const py::object& xs) {
    std::optional<Tree> t;
    Assignment asg;
    Embedding emb;
    std::vector<Point> extra;
    if (!xs.is_none()) {
      t = tree.cast<Tree>();
      asg.line_of = line_of.cast<std::vector<int>>();
      emb = make_embedding(xs.cast<py::sequence>());
      for (int v = 0; v < t->n(); ++v) extra.push_back(emb.point(ls, asg, v));
    }
    SvgScene scene = arrangement_scene(ls, extra);
    if (c > 0) add_regions(scene, RegionAtlas(ls, ColorClasses(static_cast<int>(ls.size()), c)));
    if (t) add_tree(scene, ls, *t, asg, emb);
    return render_svg(scene);
  }, py::arg("lines"), py::arg("c") = 0, py::arg("tree") = py::none(), py::arg("line_of") = py::none(),
     py::arg("x") = py::none());
}
