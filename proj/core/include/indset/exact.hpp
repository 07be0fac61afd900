#pragma once

#include <cstddef>

#include "indset/graph.hpp"
#include "indset/vertex_set.hpp"

namespace indset {

inline constexpr std::size_t kDefaultOracleLimit = 40;

struct ExactResult {
  VertexSet set;
  Weight value = 0;  // cardinality for the unweighted overload
};

/// Exact maximum(-weight) independent set by branch and bound with a greedy
/// initial solution and degree-based pruning. Refuses graphs larger than
/// `limit` vertices (and hard-caps at 64, the bitset width).
ExactResult exact_max_is(const Graph& g, std::size_t limit = kDefaultOracleLimit);
ExactResult exact_max_is(const WeightedGraph& wg,
                         std::size_t limit = kDefaultOracleLimit);

}  // namespace indset
