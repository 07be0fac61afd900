#pragma once

// Test-only exhaustive oracle: enumerates all 2^n subsets. Deliberately
// independent of the branch-and-bound implementation it cross-checks.

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "indset/graph.hpp"

namespace indset::test {

inline Weight brute_force_max_is(const Graph& g,
                                 const std::vector<Weight>& weights) {
  const std::size_t n = g.n();
  if (n > 24) throw std::invalid_argument("brute force capped at n = 24");
  std::vector<std::uint32_t> adj(n, 0);
  for (Vertex v = 0; v < n; ++v) {
    for (Vertex u : g.neighbors(v)) adj[v] |= 1u << u;
  }
  Weight best = 0;
  const std::uint32_t limit =
      n == 32 ? 0xFFFFFFFFu : ((1u << n) - 1);
  for (std::uint32_t s = 0;; ++s) {
    Weight total = 0;
    bool independent = true;
    for (std::uint32_t rest = s; rest; rest &= rest - 1) {
      const unsigned v = std::countr_zero(rest);
      if (adj[v] & s) {
        independent = false;
        break;
      }
      total += weights[v];
    }
    if (independent && total > best) best = total;
    if (s == limit) break;
  }
  return best;
}

inline Weight brute_force_max_is(const Graph& g) {
  return brute_force_max_is(g, std::vector<Weight>(g.n(), 1));
}

}  // namespace indset::test
