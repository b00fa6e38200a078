#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>

#include "cyclespec/graph.hpp"

namespace cyclespec {

enum class GraphFormat { Auto, EdgeList, Dimacs };

std::string_view format_name(GraphFormat f);

/// Parses an edge list ("u v" per line, '#' comments, 0-based ids) or a
/// DIMACS document ("p edge n m" then "e u v", 1-based). Auto picks DIMACS
/// when the first non-blank line starts with 'p' or 'c'.
///
/// Ids are used as given: n is one more than the largest id, raised to the
/// value of a "# n=<n>" header comment when present so that trailing
/// isolated vertices survive a round trip. Duplicate edges collapse.
Graph parse_graph(std::string_view text, GraphFormat format = GraphFormat::Auto);

/// Resolves Auto to the concrete format parse_graph would use.
GraphFormat detect_format(std::string_view text);

Graph read_graph_file(const std::filesystem::path& path, GraphFormat format = GraphFormat::Auto);

/// Edge list with a "# n=<n> m=<e>" header line, edges sorted. Each line of
/// `extra_comment` is emitted as a further '#' comment after the header.
std::string serialize_edge_list(const Graph& g, std::string_view extra_comment = {});

/// DIMACS "p edge n m" with 1-based "e u v" lines; comments become "c" lines.
std::string serialize_dimacs(const Graph& g, std::string_view extra_comment = {});

/// 64-bit FNV-1a of the canonical serialization; independent of the source
/// format and of edge order in the input.
std::uint64_t graph_fingerprint(const Graph& g);

std::string fingerprint_hex(std::uint64_t h);

}  // namespace cyclespec
