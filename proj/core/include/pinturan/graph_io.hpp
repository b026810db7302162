#pragma once

#include "pinturan/graph.hpp"

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace pinturan {

enum class GraphFormat { Auto, Graph6, EdgeList };

/// Standard graph6: N(n) followed by the upper triangle in column order, six bits per byte.
std::string to_graph6(const Graph& g);
Graph from_graph6(std::string_view text);

/// Edge list: header "<n> <m>" (or "n <n>"), then one "u v" pair per line; '#' starts a comment.
/// Duplicate edges are dropped with a message appended to `warnings`; loops are errors.
Graph parse_edge_list(std::istream& in, std::vector<std::string>* warnings = nullptr);
std::string to_edge_list(const Graph& g);

/// Auto picks graph6 for .g6/.graph6 and edge-list otherwise.
GraphFormat format_for_path(const std::filesystem::path& path);

Graph read_graph(const std::filesystem::path& path, GraphFormat format = GraphFormat::Auto,
                 std::vector<std::string>* warnings = nullptr);
/// All graphs of a graph6 file, one per line.
std::vector<Graph> read_graph6_file(const std::filesystem::path& path);
void write_graph(const std::filesystem::path& path, const Graph& g, GraphFormat format = GraphFormat::Auto);

} // namespace pinturan
