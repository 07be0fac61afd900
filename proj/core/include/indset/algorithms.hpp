#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "indset/graph.hpp"
#include "indset/rank.hpp"
#include "indset/vertex_set.hpp"

namespace indset {

// Solution-producing procedures. Every function here returns an independent
// set; the randomized ones are deterministic given the rank assignment.

/// One-round rank rule: the vertices that outrank all of their neighbors.
/// In expectation over uniform ranks the output size is exactly caro_wei(g).
VertexSet boppana(const Graph& g, const RankAssignment& ranks);

/// Names the identity E[|boppana|] = cw(G); returns caro_wei(g).
double expected_boppana_size(const Graph& g);

/// Weighted variant: same rule on weight-tilted ranks. Selection probability
/// of v is w(v)/w(N[v]). Requires weighted-mode ranks.
VertexSet max_alg(const WeightedGraph& wg, const RankAssignment& ranks);

/// Optimal matching-case rule for max_degree <= 1: each edge keeps its
/// heavier endpoint (rank decides ties); isolated vertices always join.
VertexSet max_alg_delta1_fix(const WeightedGraph& wg,
                             const RankAssignment& ranks);

/// Two-round extension: after the one-round winners and their neighbors are
/// removed, also admit the vertices that outrank all surviving neighbors.
VertexSet selkow_two_round(const Graph& g, const RankAssignment& ranks);

/// Repeatedly take a minimum-degree vertex and delete its closed
/// neighborhood. Output size is at least cw(G).
VertexSet greedy_min_degree(const Graph& g);

/// Repeatedly delete a maximum-degree vertex until no edges remain; the
/// survivors form the solution. Output size is at least cw(G).
VertexSet greedy_max_degree_removal(const Graph& g);

/// Weighted greedy: take the vertex maximizing w(v)/w(N[v]), delete N[v],
/// recurse. Output weight is at least weighted_nbhd_bound of the original
/// graph.
VertexSet gwmin2(const WeightedGraph& wg);

// Stable algorithm tags used by the CLI and in result files.
inline constexpr std::array<std::string_view, 6> kAlgorithmTags = {
    "boppana", "max", "selkow", "greedy-min", "greedy-max", "gwmin2"};

bool is_valid_algorithm(std::string_view tag);
bool algorithm_is_randomized(std::string_view tag);
bool algorithm_needs_weights(std::string_view tag);

struct RunResult {
  VertexSet solution;
  Weight value = 0;  // |solution| on unweighted input, w(solution) otherwise
  std::uint64_t seed = 0;
  std::string algorithm;
};

RunResult run_algorithm(std::string_view tag, const Graph& g,
                        std::uint64_t seed);
RunResult run_algorithm(std::string_view tag, const WeightedGraph& wg,
                        std::uint64_t seed);

struct MonteCarloEstimate {
  double mean = 0;
  double stderr_mean = 0;  // sample stddev / sqrt(trials)
  std::size_t trials = 0;
  std::optional<double> target;
};

/// Mean and standard error of the solution value over independent trials.
/// Trial i draws its randomness from a stream keyed by (seed, i), so the
/// estimate does not depend on execution order.
MonteCarloEstimate monte_carlo(std::string_view tag, const Graph& g,
                               std::size_t trials, std::uint64_t seed);
MonteCarloEstimate monte_carlo(std::string_view tag, const WeightedGraph& wg,
                               std::size_t trials, std::uint64_t seed);

}  // namespace indset
