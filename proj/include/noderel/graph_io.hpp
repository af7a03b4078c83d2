#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "noderel/graph.hpp"

namespace noderel {

// Edge-list text: first line "n m", then m lines "u v" (0-indexed). Anything
// after '#' on a line is a comment; blank lines are skipped.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::filesystem::path& file);
void write_edge_list(std::ostream& out, const Graph& g);

// Standard graph6 encoding (single-byte order for n <= 62, the 4-byte form up
// to 258047 and the 8-byte form beyond).
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

}  // namespace noderel
