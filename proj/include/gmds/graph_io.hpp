#pragma once

#include <filesystem>
#include <iosfwd>

#include "gmds/graph.hpp"

namespace gmds {

// Instance files are plain text:
//
//   #N <n_vertices>
//   #theta <threshold>
//   <i>\t<j>\t<w_ij>\t<w_ji>
//
// with 0-based ids and one edge per line. Other lines starting with '#' are
// comments; blank lines are ignored. #theta defaults to 1 when absent.

WeightedGraph read_graph(std::istream& in);
void write_graph(const WeightedGraph& graph, std::ostream& out);

WeightedGraph load_graph(const std::filesystem::path& path);
void save_graph(const WeightedGraph& graph, const std::filesystem::path& path);

}  // namespace gmds
