#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>

#include "eir/graph.hpp"

namespace eir {

/// Edge-list text: one edge per line as two whitespace-separated labels, a
/// single label declares an isolated vertex, blank lines and lines starting
/// with '#' are skipped. Vertex order is first appearance. Errors carry the
/// 1-based line number.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph read_edge_list(const std::filesystem::path& path);

std::string write_edge_list(const Graph& g);

/// "a", "b", ..., "z", then "v26", "v27", ...
std::string default_label(std::size_t i);

/// graph6 (n <= 62). Vertices receive default_label names.
Graph read_graph6(std::string_view text);
std::string write_graph6(const Graph& g);

}  // namespace eir
