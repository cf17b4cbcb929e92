#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>

#include "splitclust/graph.hpp"

namespace splitclust {

// Text format:
//
//   # comment
//   graph <n> <m>
//   v <id>        (n lines)
//   e <id> <id>   (m lines)
//
// Ids are whitespace-free tokens; dots only appear in split copies ("b.0").
// Duplicate vertices, duplicate edges, self-loops and count mismatches are
// ParseErrors.

Graph parse_graph(std::string_view text);
Graph read_graph(const std::filesystem::path& path);

/// Canonical serialization: vertices and edges in identifier order. Byte-stable.
std::string format_graph(const Graph& g);
void write_graph(const Graph& g, const std::filesystem::path& path);

}  // namespace splitclust
