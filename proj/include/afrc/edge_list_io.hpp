#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string_view>

#include "afrc/graph.hpp"

namespace afrc {

// Ingestion counters; duplicates include reversed repeats of earlier lines.
struct LoadSummary {
  std::size_t lines = 0;
  std::size_t comment_lines = 0;
  std::size_t duplicate_edges = 0;
};

// Edge-list text format: one edge per line as two whitespace-separated node
// labels; '#' starts a comment line; blank lines are ignored. Duplicate and
// reversed-duplicate lines collapse to one edge. Labels are remapped to dense
// ids in first-appearance order.
Graph parse_edge_list(std::istream& in, std::string_view origin,
                      LoadSummary* summary = nullptr);

Graph load_edge_list(const std::filesystem::path& path,
                     LoadSummary* summary = nullptr);

// Canonical output: one edge per line, sorted by (u, v), original labels.
// Round-trips with load_edge_list.
void write_edge_list(const Graph& g, std::ostream& out);

void save_edge_list(const Graph& g, const std::filesystem::path& path);

}  // namespace afrc
