#pragma once

#include <cstdint>
#include <utility>

#include "indset/graph.hpp"

namespace indset {

// Instance generators. All seeded generators are bit-reproducible: the same
// seed yields the identical edge list on every platform.

/// Complete graph K_k, k >= 1.
Graph gen_clique(std::size_t k);

/// Bipartite graph with sides of size `side` (ids 0..side-1 left,
/// side..2*side-1 right) in which every vertex has degree exactly `delta`.
/// Built as the union of `delta` random perfect matchings; the whole instance
/// is resampled when two matchings collide on an edge, up to 1000 attempts.
Graph gen_regular_bipartite(std::size_t delta, std::size_t side,
                            std::uint64_t seed);

/// Worst-case family for the average-degree bound: a delta-regular bipartite
/// graph on two sides of size 2*delta-1 plus two isolated vertices.
/// Returns the graph together with its independence number 2*delta+1.
std::pair<Graph, std::size_t> gen_turan_tight(std::size_t delta,
                                              std::uint64_t seed);

/// Delta-regular bipartite graph with left weight beta_den and right weight
/// beta_num, realizing the weight ratio beta = beta_num/beta_den in integers.
/// Requires 0 < beta_num <= beta_den.
WeightedGraph gen_weighted_bipartite(std::size_t delta, std::size_t side,
                                     Weight beta_num, Weight beta_den,
                                     std::uint64_t seed);

/// K_{N,N} with weight 1 on the left side and weight q on the right side.
WeightedGraph gen_weighted_complete_bipartite(std::size_t n_side, Weight q);

/// Erdos-Renyi G(n,p). Sparse-friendly: runs in O(n + m) expected time via
/// geometric skipping.
Graph gen_gnp(std::size_t n, double p, std::uint64_t seed);

}  // namespace indset
