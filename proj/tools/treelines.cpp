// treelines: command-line front end.
//
// Exit codes: 0 success / Found / CrossingFree / no configuration found,
// 1 NotFound / Violation / configuration found, 2 input errors.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <numeric>
#include <thread>

#include "treelines/io.hpp"
#include "treelines/ramsey.hpp"
#include "treelines/svg.hpp"
#include "treelines/tree_embed.hpp"
#include "treelines/unstretch.hpp"

using namespace treelines;

namespace {

constexpr int kOk = 0;
constexpr int kNegative = 1;
constexpr int kInputError = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("TREELINES_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      std::cerr << "warning: ignoring malformed TREELINES_SEED\n";
    }
  }
  return 1;
}

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? " " : "") + std::to_string(v[i]);
  return out;
}

std::vector<int> file_ids(const LineSet& ls, const std::vector<int>& ids) {
  std::vector<int> out;
  for (int id : ids) out.push_back(ls.input_label(id));
  return out;
}

std::string point_str(const Point& p) { return "(" + to_string(p.x) + ", " + to_string(p.y) + ")"; }

Instance load(const std::string& path) { return parse_instance(read_file(path)); }

void require_tree(const Instance& in, bool with_assign) {
  if (!in.tree) throw Error(Errc::Validation, "instance has no tree");
  if (with_assign && !in.assign) throw Error(Errc::Validation, "instance has no assignment");
}

void write_file(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << body)) throw Error(Errc::InvalidArgument, "cannot write '" + path + "'");
}

int cmd_analyze(const std::string& path) {
  Instance in = load(path);
  const LineSet& ls = in.lines;
  std::cout << "lines: " << ls.size() << "\n";
  std::cout << "general_position: yes\n";
  std::cout << "kind: " << (ls.size() >= 3 ? to_string(classify_cap_cup(ls)) : "n/a") << "\n";
  std::vector<int> all(ls.size());
  std::iota(all.begin(), all.end(), 1);
  std::cout << "slope_order: " << join(file_ids(ls, all)) << "\n";
  for (int k = 1; k <= static_cast<int>(ls.size()); ++k) {
    std::cout << "line " << k << ": id " << ls.input_label(k) << " slope " << to_string(ls.line(k).slope)
              << " offset " << to_string(ls.line(k).dual_offset) << "\n";
  }
  if (in.tree) std::cout << "tree_vertices: " << in.tree->n() << "\n";
  std::cout << "assignment: " << (in.assign ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_extract_cap(const std::string& path) {
  const LineSet ls = load(path).lines;
  const CapCupSubset s = longest_cap_cup(ls);
  std::cout << "kind: " << to_string(s.kind) << "\n";
  std::cout << "size: " << s.ids.size() << "\n";
  std::cout << "ids: " << join(s.ids) << "\n";
  std::cout << "file_ids: " << join(file_ids(ls, s.ids)) << "\n";
  std::cout << "guarantee: " << erdos_szekeres_bound(static_cast<long long>(ls.size())) << "\n";
  return kOk;
}

int cmd_extract_monotone(const std::string& path) {
  const LineSet ls = load(path).lines;
  const MonotoneGapChain c = extract_monotone_gaps(ls);
  std::cout << "direction: " << to_string(c.direction) << "\n";
  std::cout << "size: " << c.ids.size() << "\n";
  std::cout << "ids: " << join(c.ids) << "\n";
  std::cout << "file_ids: " << join(file_ids(ls, c.ids)) << "\n";
  std::cout << "guarantee: " << mono_path_bound(static_cast<long long>(ls.size())) << "\n";
  return kOk;
}

int cmd_extract_doubling(const std::string& path) {
  const LineSet ls = load(path).lines;
  DoublingChain c;
  try {
    c = extract_doubling(ls);
  } catch (const Error& e) {
    if (e.code() != Errc::ChainTooShort) throw;
    std::cout << "result: NotFound\nreason: " << e.what() << "\n";
    return kNegative;
  }
  std::cout << "result: Found\n";
  std::cout << "variant: " << to_string(c.variant) << "\n";
  std::cout << "size: " << c.ids.size() << "\n";
  std::cout << "ids: " << join(c.ids) << "\n";
  std::cout << "file_ids: " << join(file_ids(ls, c.ids)) << "\n";
  std::cout << "span_acute: " << (span_is_acute(ls, c.ids) ? "yes" : "no") << "\n";
  return kOk;
}

int cmd_check(const std::string& path, const std::string& emb_path) {
  Instance in = load(path);
  require_tree(in, true);
  const Embedding emb = parse_embedding(read_file(emb_path), in.tree->n());
  const EmbeddingVerdict v = check_embedding(in.lines, *in.tree, *in.assign, emb);
  std::cout << "verdict: " << (v.crossing_free() ? "CrossingFree" : "Violation") << "\n";
  for (const Violation& x : v.violations) std::cout << "violation: " << to_string(x.kind) << " " << join(x.witness) << "\n";
  for (const Warning& x : v.warnings) std::cout << "warning: " << to_string(x.kind) << " " << join(x.witness) << "\n";
  return v.crossing_free() ? kOk : kNegative;
}

int cmd_solve(const std::string& path, const SolveOptions& opts, const std::string& out_path) {
  Instance in = load(path);
  require_tree(in, true);
  const SolveResult r = solve(in.lines, *in.tree, *in.assign, opts);
  std::cout << "result: " << (r.found ? "Found" : "NotFound") << "\n";
  std::cout << "nodes: " << r.nodes << "\n";
  std::cout << "restarts: " << r.restarts << "\n";
  std::cout << "discrete_exhausted: " << (r.discrete_exhausted ? "yes" : "no") << "\n";
  if (!r.found) return kNegative;
  const std::string body = serialize_embedding(*r.found);
  std::cout << body;
  if (!out_path.empty()) write_file(out_path, body);
  return kOk;
}

int cmd_scan(const std::string& path, const SolveOptions& opts, bool force, unsigned workers) {
  Instance in = load(path);
  require_tree(in, false);
  const ScanReport rep = scan_universality(in.lines, *in.tree, opts, workers, force);
  for (const ScanEntry& e : rep.entries) {
    std::cout << "bijection: " << join(e.line_of) << " -> " << (e.found ? "Found" : "NotFound") << "\n";
  }
  std::cout << "found: " << rep.found << "\n";
  std::cout << "not_found: " << rep.not_found << "\n";
  std::cout << "total: " << rep.entries.size() << "\n";
  return rep.not_found == 0 ? kOk : kNegative;
}

int cmd_unstretch(const std::string& path, SearchOptions opts) {
  const LineSet ls = load(path).lines;
  if (ls.size() != 6) throw Error(Errc::Validation, "a frame needs exactly six lines");
  const SixLineFrame frame = validate_frame(ls, {1, 2, 3, 4, 5, 6});
  const CanonicalFrame canon = canonical_frame(frame);
  std::cout << "kind: " << to_string(frame.kind) << "\n";
  std::cout << "variant: " << to_string(*frame.variant) << "\n";
  std::cout << "symmetry: " << to_string(canon.map) << "\n";
  std::cout << "checks: " << opts.checks << "\n";
  const SearchReport rep = feasibility_search(canon.frame, opts);
  std::cout << "samples: " << rep.evaluated << "\n";
  std::cout << "exact_checks: " << rep.exact_checks << "\n";
  if (!rep.found) {
    std::cout << "result: no configuration found\n";
    return kOk;
  }
  // report in the caller's coordinates
  const TripleEdgeConfig& c = *rep.found;
  std::cout << "result: configuration found\n";
  for (int j = 0; j < 3; ++j) {
    std::cout << "edge " << j + 1 << ": " << point_str(apply(canon.map, c.A[static_cast<std::size_t>(j)])) << " -> "
              << point_str(apply(canon.map, c.C[static_cast<std::size_t>(j)])) << "\n";
  }
  const ConfigVerdict full = validate_config(canon.frame, c, CheckAll);
  std::cout << "full_check: " << full.describe() << "\n";
  const ChainCheck chk = lemma24_check(derive_chain(canon.frame, c));
  std::cout << "chain: " << chk.describe() << "\n";
  return kNegative;
}

int cmd_regions(const std::string& path, int c, const std::string& svg_path) {
  const LineSet ls = load(path).lines;
  RegionAtlas atlas(ls, ColorClasses(static_cast<int>(ls.size()), c));
  std::cout << "lines: " << ls.size() << "\nclasses: " << c << "\n";
  if (c > 1) {
    for (const RegionIndex& r : atlas.regions()) {
      const RegionHull& h = atlas.hull(r);
      std::cout << "region " << r.a << " " << r.b << ": sides " << h.side_count() << " bounded "
                << (h.bounded() ? "yes" : "no") << " degenerate " << (h.degenerate ? "yes" : "no") << " vertices";
      for (const Point& p : h.vertices) std::cout << " " << point_str(p);
      std::cout << "\n";
    }
  }
  if (!svg_path.empty()) {
    SvgScene scene = arrangement_scene(ls);
    add_regions(scene, atlas);
    write_file(svg_path, render_svg(scene));
    std::cout << "svg: " << svg_path << "\n";
  }
  return kOk;
}

int cmd_render(const std::string& path, const std::string& emb_path, int c, const std::string& svg_path) {
  Instance in = load(path);
  std::optional<Embedding> emb;
  std::vector<Point> extra;
  if (!emb_path.empty()) {
    require_tree(in, true);
    emb = parse_embedding(read_file(emb_path), in.tree->n());
    for (int v = 0; v < in.tree->n(); ++v) extra.push_back(emb->point(in.lines, *in.assign, v));
  }
  SvgScene scene = arrangement_scene(in.lines, extra);
  if (c > 0) add_regions(scene, RegionAtlas(in.lines, ColorClasses(static_cast<int>(in.lines.size()), c)));
  if (emb) add_tree(scene, in.lines, *in.tree, *in.assign, *emb);
  write_file(svg_path, render_svg(scene));
  std::cout << "svg: " << svg_path << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Trees embedded on lines: exact checks, search and certificates.\n"
               "Seeds default to $TREELINES_SEED, else 1."};
  app.require_subcommand(1);
  const std::uint64_t env_seed = default_seed();

  std::string instance, embedding, svg, out;
  int refine = 2, c = 0;
  long long budget = 1000, node_limit = 2000000, samples = 1000000;
  std::uint64_t seed = env_seed;
  unsigned workers = 0, checks = CheckAll;
  bool force = false;

  auto* analyze = app.add_subcommand("analyze", "general position, cap/cup and slope order");
  analyze->add_option("instance", instance)->required();
  auto* ecap = app.add_subcommand("extract-cap", "largest cap or cup subset");
  ecap->add_option("lines", instance)->required();
  auto* emono = app.add_subcommand("extract-monotone", "longest chain with monotone angle gaps");
  emono->add_option("lines", instance)->required();
  auto* edoub = app.add_subcommand("extract-doubling", "doubling chain within a right angle");
  edoub->add_option("lines", instance)->required();

  auto* check = app.add_subcommand("check", "verify an embedding");
  check->add_option("instance", instance)->required();
  check->add_option("embedding", embedding)->required();

  auto add_solve_opts = [&](CLI::App* sub) {
    sub->add_option("--refine", refine, "candidate points per interval")->check(CLI::PositiveNumber);
    sub->add_option("--budget", budget, "randomized restarts")->check(CLI::NonNegativeNumber);
    sub->add_option("--seed", seed, "RNG seed");
    sub->add_option("--node-limit", node_limit, "backtracking nodes")->check(CLI::NonNegativeNumber);
  };
  auto* solve_cmd = app.add_subcommand("solve", "search for a crossing-free embedding");
  solve_cmd->add_option("instance", instance)->required();
  solve_cmd->add_option("--out", out, "also write the embedding here");
  add_solve_opts(solve_cmd);

  auto* scan = app.add_subcommand("scan", "solve every bijection of the tree onto the lines");
  scan->add_option("instance", instance)->required();
  scan->add_flag("--force", force, "allow more than seven vertices");
  scan->add_option("--workers", workers, "threads, 0 for all cores");
  add_solve_opts(scan);

  auto* unstretch = app.add_subcommand("unstretch", "search a six-line frame for a three-edge configuration");
  unstretch->add_option("lines", instance)->required();
  unstretch->add_option("--samples", samples)->check(CLI::PositiveNumber);
  unstretch->add_option("--seed", seed);
  unstretch->add_option("--workers", workers, "threads, 0 for all cores");
  unstretch->add_option("--checks", checks, "property mask: 1 (i), 2 (ii), 4 (iii)")->check(CLI::Range(1u, 7u));

  auto* regions = app.add_subcommand("regions", "region hulls for c color classes");
  regions->add_option("lines", instance)->required();
  regions->add_option("--c", c, "number of classes, divides n")->required()->check(CLI::PositiveNumber);
  regions->add_option("--svg", svg);

  auto* render = app.add_subcommand("render", "draw an instance and optionally an embedding");
  render->add_option("instance", instance)->required();
  render->add_option("embedding", embedding);
  render->add_option("--svg", svg)->required();
  render->add_option("--c", c, "also draw regions for c classes")->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kInputError;
  }

  SolveOptions sopts;
  sopts.refine = refine;
  sopts.budget = budget;
  sopts.seed = seed;
  sopts.node_limit = node_limit;

  try {
    if (*analyze) return cmd_analyze(instance);
    if (*ecap) return cmd_extract_cap(instance);
    if (*emono) return cmd_extract_monotone(instance);
    if (*edoub) return cmd_extract_doubling(instance);
    if (*check) return cmd_check(instance, embedding);
    if (*solve_cmd) return cmd_solve(instance, sopts, out);
    if (*scan) return cmd_scan(instance, sopts, force, workers);
    if (*unstretch) {
      SearchOptions o;
      o.samples = samples;
      o.seed = seed;
      o.workers = workers;
      o.checks = checks;
      return cmd_unstretch(instance, o);
    }
    if (*regions) return cmd_regions(instance, c, svg);
    if (*render) return cmd_render(instance, embedding, c, svg);
  } catch (const Error& e) {
    std::cerr << "error: " << errc_name(e.code()) << ": " << e.what() << "\n";
    return kInputError;
  }
  return kInputError;
}
