#include "indset/exact.hpp"

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace indset {

namespace {

// Branch and bound over 64-bit candidate masks. The bound is the weight of
// all remaining candidates; branching picks the candidate of maximum degree
// within the candidate subgraph, and once that degree drops to <= 1 the
// remainder (a partial matching) is solved directly.
class Solver {
 public:
  Solver(std::size_t n, const std::vector<std::uint64_t>& closed_nbhd,
         const std::vector<std::uint64_t>& open_nbhd,
         const std::vector<Weight>& weights)
      : n_(n), closed_(closed_nbhd), open_(open_nbhd), weights_(weights) {}

  void solve() {
    seed_greedy();
    const std::uint64_t all =
        n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    dfs(all, 0, 0);
  }

  Weight best_value() const { return best_value_; }
  std::uint64_t best_mask() const { return best_mask_; }

 private:
  Weight candidate_weight(std::uint64_t cand) const {
    Weight sum = 0;
    while (cand) {
      sum += weights_[std::countr_zero(cand)];
      cand &= cand - 1;
    }
    return sum;
  }

  // w(v)/w(N[v] within alive) greedy for the initial lower bound.
  void seed_greedy() {
    std::uint64_t alive = n_ == 64 ? ~0ULL : ((1ULL << n_) - 1);
    std::uint64_t chosen = 0;
    Weight value = 0;
    while (alive) {
      unsigned best_v = 0;
      long double best_ratio = -1.0L;
      for (std::uint64_t rest = alive; rest;) {
        const unsigned v = std::countr_zero(rest);
        rest &= rest - 1;
        const Weight nbhd = candidate_weight(closed_[v] & alive);
        const long double ratio =
            static_cast<long double>(weights_[v]) / nbhd;
        if (ratio > best_ratio) {
          best_ratio = ratio;
          best_v = v;
        }
      }
      chosen |= 1ULL << best_v;
      value += weights_[best_v];
      alive &= ~closed_[best_v];
    }
    best_value_ = value;
    best_mask_ = chosen;
  }

  // Candidate subgraph has maximum degree <= 1: take isolated vertices and
  // the heavier endpoint of each edge.
  Weight resolve_matching(std::uint64_t cand, std::uint64_t& picked) const {
    Weight sum = 0;
    std::uint64_t rest = cand;
    while (rest) {
      const unsigned v = std::countr_zero(rest);
      rest &= rest - 1;
      const std::uint64_t nb = open_[v] & cand;
      if (nb == 0) {
        picked |= 1ULL << v;
        sum += weights_[v];
      } else {
        const unsigned u = std::countr_zero(nb);
        // v < u here since u is still in rest
        const unsigned keep = weights_[u] > weights_[v] ? u : v;
        picked |= 1ULL << keep;
        sum += weights_[keep];
        rest &= ~(1ULL << u);
      }
    }
    return sum;
  }

  void dfs(std::uint64_t cand, Weight cur, std::uint64_t cur_mask) {
    if (cand == 0) {
      if (cur > best_value_) {
        best_value_ = cur;
        best_mask_ = cur_mask;
      }
      return;
    }
    if (cur + candidate_weight(cand) <= best_value_) return;

    unsigned pick = 0;
    int max_deg = -1;
    for (std::uint64_t rest = cand; rest;) {
      const unsigned v = std::countr_zero(rest);
      rest &= rest - 1;
      const int deg = std::popcount(open_[v] & cand);
      if (deg > max_deg) {
        max_deg = deg;
        pick = v;
      }
    }
    if (max_deg <= 1) {
      std::uint64_t picked = 0;
      const Weight extra = resolve_matching(cand, picked);
      if (cur + extra > best_value_) {
        best_value_ = cur + extra;
        best_mask_ = cur_mask | picked;
      }
      return;
    }

    dfs(cand & ~closed_[pick], cur + weights_[pick],
        cur_mask | (1ULL << pick));
    dfs(cand & ~(1ULL << pick), cur, cur_mask);
  }

  std::size_t n_;
  const std::vector<std::uint64_t>& closed_;
  const std::vector<std::uint64_t>& open_;
  const std::vector<Weight>& weights_;
  Weight best_value_ = 0;
  std::uint64_t best_mask_ = 0;
};

ExactResult solve(const Graph& g, const std::vector<Weight>& weights,
                  std::size_t limit) {
  if (g.n() > limit || g.n() > 64) {
    throw std::invalid_argument(
        "exact_max_is: graph has " + std::to_string(g.n()) +
        " vertices, above the limit of " +
        std::to_string(std::min<std::size_t>(limit, 64)));
  }
  if (g.n() == 0) return {VertexSet(0, {}), 0};

  std::vector<std::uint64_t> open(g.n(), 0), closed(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    for (Vertex u : g.neighbors(v)) open[v] |= 1ULL << u;
    closed[v] = open[v] | (1ULL << v);
  }

  Solver solver(g.n(), closed, open, weights);
  solver.solve();

  std::vector<Vertex> members;
  for (std::uint64_t rest = solver.best_mask(); rest;) {
    members.push_back(static_cast<Vertex>(std::countr_zero(rest)));
    rest &= rest - 1;
  }
  return {VertexSet(g.n(), std::move(members)), solver.best_value()};
}

}  // namespace

ExactResult exact_max_is(const Graph& g, std::size_t limit) {
  return solve(g, std::vector<Weight>(g.n(), 1), limit);
}

ExactResult exact_max_is(const WeightedGraph& wg, std::size_t limit) {
  return solve(wg.graph(), wg.weights(), limit);
}

}  // namespace indset
