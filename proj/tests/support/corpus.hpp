#pragma once

// Shared instance builders for the test suites.

#include <cstdint>
#include <vector>

#include "indset/generators.hpp"
#include "indset/graph.hpp"
#include "indset/rng.hpp"

namespace indset::test {

inline Graph petersen() {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < 5; ++i) {
    edges.emplace_back(i, (i + 1) % 5);
    edges.emplace_back(i, i + 5);
    edges.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  return Graph::build(10, edges);
}

/// Random G(n,p) with n in [n_lo, n_hi], p in [p_lo, p_hi], at least one edge.
inline Graph random_graph(Rng& rng, std::size_t n_lo, std::size_t n_hi,
                          double p_lo, double p_hi) {
  for (;;) {
    const std::size_t n = n_lo + rng.next_below(n_hi - n_lo + 1);
    const double p = p_lo + (p_hi - p_lo) * rng.next_unit();
    const Graph g = gen_gnp(n, p, rng.next_u64());
    if (g.m() >= 1) return g;
  }
}

inline std::vector<Weight> random_weights(Rng& rng, std::size_t n, Weight lo,
                                          Weight hi) {
  std::vector<Weight> w(n);
  for (auto& x : w) {
    x = lo + static_cast<Weight>(rng.next_below(
                 static_cast<std::uint64_t>(hi - lo + 1)));
  }
  return w;
}

}  // namespace indset::test
