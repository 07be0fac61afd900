#pragma once

#include <cstdint>
#include <vector>

#include "indset/graph.hpp"
#include "indset/rng.hpp"
#include "indset/types.hpp"

namespace indset {

/// Per-vertex random ranks realizing the random permutation. Two modes:
///  - uniform: 64-bit uniform keys; the induced order is a uniform random
///    permutation.
///  - weighted: key_v = ln(x_v)/w(v) with x_v uniform in (0,1], which is
///    order-isomorphic to x_v^(1/w(v)) but immune to underflow for large
///    weights.
/// Sampling rejects and redraws on key collisions, so keys are always
/// pairwise distinct; the residual tie-break (lower id wins) only matters
/// for hand-built assignments.
struct RankAssignment {
  enum class Mode { uniform, weighted };

  Mode mode = Mode::uniform;
  std::vector<std::uint64_t> ukey;  // uniform mode
  std::vector<double> wkey;         // weighted mode

  std::size_t size() const {
    return mode == Mode::uniform ? ukey.size() : wkey.size();
  }

  /// Strict total order: does u outrank v?
  bool prefers(Vertex u, Vertex v) const {
    if (mode == Mode::uniform) {
      if (ukey[u] != ukey[v]) return ukey[u] > ukey[v];
    } else {
      if (wkey[u] != wkey[v]) return wkey[u] > wkey[v];
    }
    return u < v;
  }

  /// 64-bit order-preserving encoding of vertex v's key, used as the
  /// broadcast message payload.
  std::uint64_t order_key_bits(Vertex v) const;

  /// Explicit keys for tests and replay; weighted-mode comparison semantics.
  static RankAssignment from_keys(std::vector<double> keys);
};

RankAssignment sample_uniform_ranks(std::size_t n, Rng& rng);
RankAssignment sample_weighted_ranks(const std::vector<Weight>& weights,
                                     Rng& rng);

RankAssignment sample_ranks(std::size_t n, RankAssignment::Mode mode,
                            const std::vector<Weight>* weights, Rng& rng);

/// Seed-addressed convenience surface: the seed fully determines the
/// assignment for a given (n, mode, weights), which is what "matched seeds"
/// means across the library, the round simulator and the stream executor.
RankAssignment sample_ranks(const Graph& g, RankAssignment::Mode mode,
                            const std::vector<Weight>* weights,
                            std::uint64_t seed);
RankAssignment sample_ranks(const WeightedGraph& wg, std::uint64_t seed);

}  // namespace indset
