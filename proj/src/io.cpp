#include "treelines/io.hpp"

#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace treelines {

namespace {

struct Row {
  int number = 0;  // 1-based line in the file
  std::vector<std::string> tokens;
};

std::vector<Row> tokenize(std::string_view text) {
  std::vector<Row> rows;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::istringstream in{std::string(line)};
    Row row{number, {}};
    for (std::string tok; in >> tok;) row.tokens.push_back(tok);
    if (!row.tokens.empty()) rows.push_back(std::move(row));
    if (end == text.size()) break;
  }
  return rows;
}

[[noreturn]] void syntax(const Row& row, const std::string& what) {
  throw Error(Errc::Syntax, "line " + std::to_string(row.number) + ": " + what, {row.number});
}

[[noreturn]] void invalid(const Row& row, const std::string& what) {
  throw Error(Errc::Validation, "line " + std::to_string(row.number) + ": " + what, {row.number});
}

int parse_int(const Row& row, const std::string& tok) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(tok, &used);
  } catch (const std::exception&) {
    syntax(row, "expected an integer, got '" + tok + "'");
  }
  if (used != tok.size() || v < -1000000000L || v > 1000000000L) syntax(row, "expected an integer, got '" + tok + "'");
  return static_cast<int>(v);
}

Scalar parse_rational(const Row& row, const std::string& tok) {
  try {
    return parse_scalar(tok);
  } catch (const Error& e) {
    syntax(row, e.what());
  }
}

void expect_arity(const Row& row, std::size_t n) {
  if (row.tokens.size() != n) {
    syntax(row, "'" + row.tokens[0] + "' takes " + std::to_string(n - 1) + " fields, got " +
                    std::to_string(row.tokens.size() - 1));
  }
}

// Module errors keep their message but surface as Validation.
template <class F>
auto forward(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    if (e.code() == Errc::Validation) throw;
    throw Error(Errc::Validation, std::string(errc_name(e.code())) + ": " + e.what(), e.witness());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  std::vector<Line> lines;
  std::map<int, int> file_line_row;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<Row, std::pair<int, int>>> assigns;

  for (const Row& row : tokenize(text)) {
    const std::string& d = row.tokens[0];
    if (d == "l") {
      expect_arity(row, 4);
      int id = parse_int(row, row.tokens[1]);
      if (id < 1) invalid(row, "line ids must be positive");
      if (!file_line_row.emplace(id, row.number).second) invalid(row, "duplicate line id " + std::to_string(id));
      lines.push_back({parse_rational(row, row.tokens[2]), parse_rational(row, row.tokens[3]), id});
    } else if (d == "e") {
      expect_arity(row, 3);
      edges.emplace_back(parse_int(row, row.tokens[1]), parse_int(row, row.tokens[2]));
    } else if (d == "a") {
      expect_arity(row, 3);
      assigns.push_back({row, {parse_int(row, row.tokens[1]), parse_int(row, row.tokens[2])}});
    } else {
      syntax(row, "unknown directive '" + d + "'");
    }
  }

  Instance in;
  if (lines.empty()) throw Error(Errc::Validation, "no lines");
  in.lines = forward([&] { return verify_general_position(lines); });

  if (!edges.empty() || !assigns.empty()) {
    const int n = static_cast<int>(edges.size()) + 1;
    in.tree = forward([&] { return Tree(n, edges, 0); });
  }
  if (!assigns.empty()) {
    const int n = in.tree->n();
    std::map<int, int> slope_id;
    for (int k = 1; k <= static_cast<int>(in.lines.size()); ++k) slope_id[in.lines.input_label(k)] = k;
    Assignment asg;
    asg.line_of.assign(static_cast<std::size_t>(n), 0);
    for (const auto& [row, va] : assigns) {
      const auto [v, id] = va;
      if (v < 0 || v >= n) invalid(row, "vertex " + std::to_string(v) + " is not in the tree");
      auto it = slope_id.find(id);
      if (it == slope_id.end()) invalid(row, "unknown line id " + std::to_string(id));
      if (asg.line_of[static_cast<std::size_t>(v)] != 0) invalid(row, "vertex " + std::to_string(v) + " assigned twice");
      asg.line_of[static_cast<std::size_t>(v)] = it->second;
    }
    for (int v = 0; v < n; ++v) {
      if (asg.line_of[static_cast<std::size_t>(v)] == 0) {
        throw Error(Errc::Validation, "assignment not total: vertex " + std::to_string(v) + " has no line", {v});
      }
    }
    forward([&] {
      asg.validate(*in.tree, in.lines);
      return 0;
    });
    in.assign = std::move(asg);
  }
  return in;
}

std::string serialize_lines(const LineSet& ls) {
  std::string out;
  for (int k = 1; k <= static_cast<int>(ls.size()); ++k) {
    const Line& l = ls.line(k);
    out += "l " + std::to_string(k) + " " + to_string(l.slope) + " " + to_string(l.dual_offset) + "\n";
  }
  return out;
}

std::string serialize_instance(const Instance& in) {
  std::string out = "# lines\n" + serialize_lines(in.lines);
  if (in.tree) {
    out += "# tree\n";
    for (const auto& [p, c] : in.tree->edges()) out += "e " + std::to_string(p) + " " + std::to_string(c) + "\n";
  }
  if (in.assign) {
    out += "# assign\n";
    for (std::size_t v = 0; v < in.assign->line_of.size(); ++v) {
      out += "a " + std::to_string(v) + " " + std::to_string(in.assign->line_of[v]) + "\n";
    }
  }
  return out;
}

Embedding parse_embedding(std::string_view text, int n) {
  Embedding emb;
  emb.x.assign(static_cast<std::size_t>(n), Scalar(0));
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (const Row& row : tokenize(text)) {
    if (row.tokens[0] != "p") syntax(row, "unknown directive '" + row.tokens[0] + "'");
    expect_arity(row, 3);
    const int v = parse_int(row, row.tokens[1]);
    if (v < 0 || v >= n) invalid(row, "vertex " + std::to_string(v) + " is not in the tree");
    if (seen[static_cast<std::size_t>(v)]) invalid(row, "vertex " + std::to_string(v) + " placed twice");
    seen[static_cast<std::size_t>(v)] = true;
    emb.x[static_cast<std::size_t>(v)] = parse_rational(row, row.tokens[2]);
  }
  for (int v = 0; v < n; ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw Error(Errc::Validation, "embedding not total: vertex " + std::to_string(v) + " has no position", {v});
    }
  }
  return emb;
}

std::string serialize_embedding(const Embedding& emb) {
  std::string out;
  for (std::size_t v = 0; v < emb.x.size(); ++v) out += "p " + std::to_string(v) + " " + to_string(emb.x[v]) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidArgument, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace treelines
