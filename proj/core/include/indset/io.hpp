#pragma once

#include <iosfwd>
#include <vector>

#include "indset/graph.hpp"
#include "indset/types.hpp"

namespace indset {

// Edge-list text format: first line "n m", then one "u v" pair per line
// (0-based ids, whitespace-separated). The writer emits the canonical sorted
// edge list. Weights files hold one positive integer per line, line i being
// the weight of vertex i.

Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

std::vector<Weight> read_weights(std::istream& in, std::size_t n);
void write_weights(std::ostream& out, const std::vector<Weight>& weights);

}  // namespace indset
