#include "indset/distsim.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "indset/generators.hpp"
#include "indset/rng.hpp"

namespace indset {

bool node_decides(const NodeView& view) {
  for (const InboxEntry& msg : view.inbox) {
    if (view.own_key_bits <= msg.key_bits) return false;
  }
  return true;
}

unsigned suggested_quantize_bits(std::size_t n) {
  if (n < 2) return 1;
  const double bits = 3.0 * std::log2(static_cast<double>(n));
  return static_cast<unsigned>(std::min(64.0, std::ceil(bits)));
}

namespace {

std::uint64_t quantize(std::uint64_t key_bits, unsigned bits) {
  if (bits == 0 || bits >= 64) return key_bits;
  return key_bits >> (64 - bits);
}

SimulationResult simulate(const Graph& g, const std::vector<Weight>* weights,
                          std::uint64_t seed, const SimulateOptions& options) {
  Rng rng(seed);
  const auto mode = weights ? RankAssignment::Mode::weighted
                            : RankAssignment::Mode::uniform;
  const RankAssignment ranks = sample_ranks(g.n(), mode, weights, rng);

  const bool weighted = weights != nullptr;
  const unsigned key_bits = options.quantize_bits == 0
                                ? 64u
                                : std::min(64u, options.quantize_bits);
  const unsigned message_bits = key_bits + (weighted ? 64u : 0u);
  const unsigned budget = options.budget_bits == 0
                              ? 64u + (weighted ? 64u : 0u)
                              : options.budget_bits;
  if (message_bits > budget) {
    throw std::invalid_argument("simulate_one_round: message of " +
                                std::to_string(message_bits) +
                                " bits exceeds budget of " +
                                std::to_string(budget));
  }

  RoundTrace trace;
  trace.message_budget_bits = budget;
  trace.decisions.assign(g.n(), false);

  // Round 1: every node broadcasts its key (and weight) on all ports; the
  // inbox of v holds the message of its k-th neighbor at port k.
  for (Vertex v = 0; v < g.n(); ++v) {
    NodeView view;
    view.own_id = v;
    view.own_key_bits = quantize(ranks.order_key_bits(v), key_bits);
    if (weighted) view.own_weight = (*weights)[v];
    view.inbox.reserve(g.degree(v));
    std::uint32_t port = 0;
    for (Vertex u : g.neighbors(v)) {
      InboxEntry msg;
      msg.port = port++;
      msg.key_bits = quantize(ranks.order_key_bits(u), key_bits);
      if (weighted) msg.weight = (*weights)[u];
      view.inbox.push_back(msg);
    }
    trace.messages_sent += view.inbox.size();
    trace.decisions[v] = node_decides(view);
  }
  trace.max_message_bits = trace.messages_sent > 0 ? message_bits : 0;

  SimulationResult result;
  result.trace = std::move(trace);
  result.selected = VertexSet::from_flags(result.trace.decisions);
  return result;
}

}  // namespace

SimulationResult simulate_one_round(const Graph& g, std::uint64_t seed,
                                    const SimulateOptions& options) {
  return simulate(g, nullptr, seed, options);
}

SimulationResult simulate_one_round(const WeightedGraph& wg,
                                    std::uint64_t seed,
                                    const SimulateOptions& options) {
  return simulate(wg.graph(), &wg.weights(), seed, options);
}

OnlineSession::OnlineSession(std::size_t n, RankAssignment::Mode mode,
                             const std::vector<Weight>* weights,
                             std::uint64_t seed)
    : alive_(n, true), alive_count_(n) {
  Rng rng(seed);
  ranks_ = sample_ranks(n, mode, weights, rng);
}

OnlineSession::OnlineSession(RankAssignment ranks)
    : ranks_(std::move(ranks)), alive_(ranks_.size(), true),
      alive_count_(ranks_.size()) {}

OnlineSession::Eviction OnlineSession::add_edge(Vertex u, Vertex v) {
  const std::size_t n = alive_.size();
  if (u >= n || v >= n || u == v) {
    throw std::invalid_argument("add_edge: invalid edge (" +
                                std::to_string(u) + "," + std::to_string(v) +
                                ")");
  }
  ++edges_processed_;
  // The lower-ranked endpoint can never outrank all its neighbors, so it is
  // evicted regardless of the other endpoint's state. Eviction is final.
  const Vertex loser = ranks_.prefers(u, v) ? v : u;
  Eviction report{{u, v}, std::nullopt};
  if (alive_[loser]) {
    alive_[loser] = false;
    --alive_count_;
    report.evicted = loser;
  }
  return report;
}

VertexSet OnlineSession::current_set() const {
  return VertexSet::from_flags(alive_);
}

std::size_t OnlineSession::state_bytes() const {
  const std::size_t n = alive_.size();
  return (n + 7) / 8 + n * 8;  // alive bit-vector + keys
}

VertexSet stream_run(std::size_t n, const std::vector<Edge>& edges,
                     RankAssignment::Mode mode,
                     const std::vector<Weight>* weights, std::uint64_t seed) {
  OnlineSession session(n, mode, weights, seed);
  for (const auto& [u, v] : edges) session.add_edge(u, v);
  return session.current_set();
}

IndistReport indistinguishability_demo(std::size_t delta, std::uint64_t seed,
                                       std::size_t trials) {
  if (delta < 1) {
    throw std::invalid_argument("indistinguishability_demo: delta >= 1");
  }
  if (trials < 2) {
    throw std::invalid_argument("indistinguishability_demo: trials >= 2");
  }
  const Graph clique = gen_clique(delta + 1);
  const Graph bip = gen_regular_bipartite(delta, delta + 1, Rng::mix(seed));

  IndistReport report;
  report.delta = delta;
  report.trials = trials;

  auto run = [&](const Graph& g, std::size_t alpha) {
    for (Vertex v = 0; v < g.n(); ++v) {
      if (g.degree(v) != delta) {
        throw std::logic_error("demo instance is not regular");
      }
    }
    IndistReport::InstanceStats st;
    st.n = g.n();
    st.alpha = alpha;
    st.inbox_entries_per_node = delta;
    double sum = 0, sum_sq = 0;
    for (std::size_t i = 0; i < trials; ++i) {
      const auto res =
          simulate_one_round(g, Rng::for_stream(seed, i).next_u64());
      const double size = static_cast<double>(res.selected.size());
      sum += size;
      sum_sq += size * size;
    }
    st.mean_solution = sum / static_cast<double>(trials);
    const double var = std::max(
        0.0, (sum_sq - sum * st.mean_solution) / static_cast<double>(trials - 1));
    st.stderr_mean = std::sqrt(var / static_cast<double>(trials));
    return st;
  };

  report.clique = run(clique, 1);
  report.bipartite = run(bip, delta + 1);
  report.bipartite_ratio =
      static_cast<double>(report.bipartite.alpha) /
      report.bipartite.mean_solution;
  return report;
}

}  // namespace indset
