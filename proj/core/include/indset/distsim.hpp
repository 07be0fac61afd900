#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "indset/graph.hpp"
#include "indset/rank.hpp"
#include "indset/types.hpp"
#include "indset/vertex_set.hpp"

namespace indset {

// The same one-round rule under its two systems readings: a broadcast
// message-passing round with bandwidth accounting, and a single-pass edge
// stream / preemptive online executor. For matched seeds all three paths
// (library algorithm, round simulation, stream) select the same set.

struct InboxEntry {
  std::uint32_t port = 0;            // 0..degree-1
  std::uint64_t key_bits = 0;        // order-preserving key encoding
  std::optional<Weight> weight;      // present in weighted mode
};

/// Everything a node knows when it decides: its own id, key and weight, plus
/// one received message per port. The decision procedure receives nothing
/// else.
struct NodeView {
  Vertex own_id = 0;
  std::uint64_t own_key_bits = 0;
  std::optional<Weight> own_weight;
  std::vector<InboxEntry> inbox;
};

/// Join iff the node's key strictly exceeds every inbox key.
bool node_decides(const NodeView& view);

struct RoundTrace {
  std::size_t messages_sent = 0;       // one delivery per port: 2m total
  unsigned max_message_bits = 0;
  unsigned message_budget_bits = 0;
  std::vector<bool> decisions;
};

struct SimulateOptions {
  /// Quantize broadcast keys to this many most-significant bits (0 = full
  /// 64-bit keys). With quantization, key ties make neither endpoint join,
  /// so the output stays independent but may be smaller and no longer match
  /// the library algorithms.
  unsigned quantize_bits = 0;
  /// Bandwidth cap per message; 0 selects the default of 64 key bits plus
  /// 64 weight bits in weighted mode. Exceeding the cap is an error.
  unsigned budget_bits = 0;
};

struct SimulationResult {
  VertexSet selected;
  RoundTrace trace;
};

SimulationResult simulate_one_round(const Graph& g, std::uint64_t seed,
                                    const SimulateOptions& options = {});
SimulationResult simulate_one_round(const WeightedGraph& wg, std::uint64_t seed,
                                    const SimulateOptions& options = {});

/// ceil(3*log2(n)) message bits, enough key precision for collision
/// probability O(1/n) per pair.
unsigned suggested_quantize_bits(std::size_t n);

/// Preemptive online executor. State is Theta(n): the rank keys plus one
/// alive bit per vertex; edges are consumed, never stored. An arriving edge
/// evicts its lower-ranked endpoint (if still alive); evicted vertices never
/// return, and after any prefix the alive set is exactly the set of vertices
/// that outrank all neighbors seen so far.
class OnlineSession {
 public:
  struct Eviction {
    Edge edge;
    std::optional<Vertex> evicted;
  };

  OnlineSession(std::size_t n, RankAssignment::Mode mode,
                const std::vector<Weight>* weights, std::uint64_t seed);
  /// Replay with explicit ranks.
  explicit OnlineSession(RankAssignment ranks);

  Eviction add_edge(Vertex u, Vertex v);
  VertexSet current_set() const;
  std::size_t alive_count() const { return alive_count_; }
  std::size_t edges_processed() const { return edges_processed_; }
  const RankAssignment& ranks() const { return ranks_; }

  /// Resident state: keys + alive bits.
  std::size_t state_bytes() const;

 private:
  RankAssignment ranks_;
  std::vector<bool> alive_;
  std::size_t alive_count_ = 0;
  std::size_t edges_processed_ = 0;
};

/// Single pass over an edge sequence; equals the one-shot rule on the whole
/// graph with the same seed, for every edge order.
VertexSet stream_run(std::size_t n, const std::vector<Edge>& edges,
                     RankAssignment::Mode mode,
                     const std::vector<Weight>* weights, std::uint64_t seed);

/// Side-by-side run on the two instances no one-round rule can tell apart:
/// the (delta+1)-clique and a delta-regular bipartite graph. Both yield
/// n/(delta+1)-sized solutions in expectation while the bipartite optimum is
/// n/2; illustrative, not a proof.
struct IndistReport {
  struct InstanceStats {
    std::size_t n = 0;
    std::size_t alpha = 0;
    double mean_solution = 0;
    double stderr_mean = 0;
    std::size_t inbox_entries_per_node = 0;
  };
  std::size_t delta = 0;
  std::size_t trials = 0;
  InstanceStats clique;
  InstanceStats bipartite;
  double bipartite_ratio = 0;  // alpha / mean_solution
};

IndistReport indistinguishability_demo(std::size_t delta, std::uint64_t seed,
                                       std::size_t trials = 10000);

}  // namespace indset
