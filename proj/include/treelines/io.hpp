#pragma once

// Plain-text instance and embedding files.
//
//   l <id> <slope> <offset>   line y = slope * x - offset
//   e <parent> <child>        tree edge, the root is vertex 0
//   a <vertex> <line-id>      assignment
//   p <vertex> <x>            embedding position on the assigned line
//
// Numbers are integers or p/q rationals. '#' starts a comment. Line ids in a
// file are arbitrary distinct positive integers; after parsing, lines are
// re-indexed 1..n by slope and the assignment follows them.

#include <optional>
#include <string>
#include <string_view>

#include "treelines/lineset.hpp"
#include "treelines/tree_embed.hpp"

namespace treelines {

struct Instance {
  LineSet lines;
  std::optional<Tree> tree;
  std::optional<Assignment> assign;
};

/// Throws Syntax (witness: 1-based file line) for malformed rows and
/// Validation for well-formed rows that do not describe a valid instance.
Instance parse_instance(std::string_view text);

/// Canonical form: ids in slope order, edges in input order, one
/// assignment row per vertex.
std::string serialize_instance(const Instance& in);
std::string serialize_lines(const LineSet& ls);

/// Exactly one `p` row for each of the n vertices.
Embedding parse_embedding(std::string_view text, int n);
std::string serialize_embedding(const Embedding& emb);

/// Reads a whole file; throws InvalidArgument when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace treelines
