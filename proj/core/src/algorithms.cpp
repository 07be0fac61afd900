#include "indset/algorithms.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "indset/bounds.hpp"
#include "indset/rng.hpp"

namespace indset {

namespace {

void check_ranks(const Graph& g, const RankAssignment& ranks) {
  if (ranks.size() != g.n()) {
    throw std::invalid_argument("rank assignment does not cover the graph");
  }
}

VertexSet local_rank_maxima(const Graph& g, const RankAssignment& ranks) {
  std::vector<bool> in(g.n(), false);
  for (Vertex v = 0; v < g.n(); ++v) {
    bool wins = true;
    for (Vertex u : g.neighbors(v)) {
      if (!ranks.prefers(v, u)) {
        wins = false;
        break;
      }
    }
    in[v] = wins;
  }
  return VertexSet::from_flags(in);
}

}  // namespace

VertexSet boppana(const Graph& g, const RankAssignment& ranks) {
  check_ranks(g, ranks);
  return local_rank_maxima(g, ranks);
}

double expected_boppana_size(const Graph& g) { return caro_wei(g); }

VertexSet max_alg(const WeightedGraph& wg, const RankAssignment& ranks) {
  check_ranks(wg.graph(), ranks);
  if (ranks.mode != RankAssignment::Mode::weighted) {
    throw std::invalid_argument("max_alg: requires weighted-mode ranks");
  }
  return local_rank_maxima(wg.graph(), ranks);
}

VertexSet max_alg_delta1_fix(const WeightedGraph& wg,
                             const RankAssignment& ranks) {
  const Graph& g = wg.graph();
  check_ranks(g, ranks);
  if (g.max_degree() > 1) {
    throw std::invalid_argument(
        "max_alg_delta1_fix: graph has max_degree > 1");
  }
  std::vector<bool> in(g.n(), false);
  for (Vertex v = 0; v < g.n(); ++v) {
    if (g.degree(v) == 0) {
      in[v] = true;
      continue;
    }
    const Vertex u = g.neighbors(v)[0];
    if (wg.weight(v) != wg.weight(u)) {
      in[v] = wg.weight(v) > wg.weight(u);
    } else {
      in[v] = ranks.prefers(v, u);
    }
  }
  return VertexSet::from_flags(in);
}

VertexSet selkow_two_round(const Graph& g, const RankAssignment& ranks) {
  check_ranks(g, ranks);
  const VertexSet round1 = local_rank_maxima(g, ranks);

  std::vector<bool> removed(g.n(), false);
  for (Vertex v : round1) {
    removed[v] = true;
    for (Vertex u : g.neighbors(v)) removed[u] = true;
  }

  std::vector<bool> in(g.n(), false);
  for (Vertex v : round1) in[v] = true;
  for (Vertex v = 0; v < g.n(); ++v) {
    if (removed[v]) continue;
    bool wins = true;
    for (Vertex u : g.neighbors(v)) {
      if (!removed[u] && !ranks.prefers(v, u)) {
        wins = false;
        break;
      }
    }
    in[v] = wins;
  }
  return VertexSet::from_flags(in);
}

VertexSet greedy_min_degree(const Graph& g) {
  // deg[v] counts surviving neighbors; buckets hold lazy entries, an entry is
  // valid iff the vertex is alive and still has the entry's degree. Every
  // alive vertex has a valid entry at bucket[deg[v]], so the scan never runs
  // off the end while vertices remain.
  std::vector<std::size_t> deg(g.n());
  std::vector<bool> alive(g.n(), true);
  std::vector<bool> chosen(g.n(), false);
  std::vector<std::vector<Vertex>> bucket(g.max_degree() + 1);
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    bucket[deg[v]].push_back(v);
  }

  std::size_t alive_count = g.n();
  std::size_t cursor = 0;
  while (alive_count > 0) {
    while (bucket[cursor].empty()) ++cursor;
    Vertex v = bucket[cursor].back();
    bucket[cursor].pop_back();
    if (!alive[v] || deg[v] != cursor) continue;
    chosen[v] = true;
    alive[v] = false;
    --alive_count;
    for (Vertex u : g.neighbors(v)) {
      if (!alive[u]) continue;
      alive[u] = false;
      --alive_count;
      for (Vertex w : g.neighbors(u)) {
        if (alive[w]) {
          --deg[w];
          bucket[deg[w]].push_back(w);
          if (deg[w] < cursor) cursor = deg[w];
        }
      }
    }
  }
  return VertexSet::from_flags(chosen);
}

VertexSet greedy_max_degree_removal(const Graph& g) {
  // Mirror image of the min-degree loop: degrees only decrease, so scanning
  // the buckets downward finds the maximum; entries never appear above the
  // cursor.
  std::vector<std::size_t> deg(g.n());
  std::vector<bool> alive(g.n(), true);
  std::vector<std::vector<Vertex>> bucket(g.max_degree() + 1);
  std::size_t edges_left = g.m();
  for (Vertex v = 0; v < g.n(); ++v) {
    deg[v] = g.degree(v);
    bucket[deg[v]].push_back(v);
  }

  std::size_t cursor = bucket.size() - 1;
  while (edges_left > 0) {
    while (bucket[cursor].empty()) --cursor;
    Vertex v = bucket[cursor].back();
    bucket[cursor].pop_back();
    if (!alive[v] || deg[v] != cursor) continue;
    alive[v] = false;
    for (Vertex u : g.neighbors(v)) {
      if (!alive[u]) continue;
      --edges_left;
      --deg[u];
      bucket[deg[u]].push_back(u);
    }
  }
  return VertexSet::from_flags(alive);
}

VertexSet gwmin2(const WeightedGraph& wg) {
  const Graph& g = wg.graph();
  std::vector<bool> alive(g.n(), true);
  std::vector<bool> chosen(g.n(), false);
  std::vector<Weight> nbhd(g.n());  // w(N[v]) within the surviving graph
  for (Vertex v = 0; v < g.n(); ++v) nbhd[v] = wg.closed_nbhd_weight(v);

  std::size_t alive_count = g.n();
  while (alive_count > 0) {
    Vertex best = 0;
    bool found = false;
    for (Vertex v = 0; v < g.n(); ++v) {
      if (!alive[v]) continue;
      if (!found) {
        best = v;
        found = true;
        continue;
      }
      // w(v)/nbhd[v] > w(best)/nbhd[best], cross-multiplied
      const auto lhs = static_cast<__int128>(wg.weight(v)) * nbhd[best];
      const auto rhs = static_cast<__int128>(wg.weight(best)) * nbhd[v];
      if (lhs > rhs) best = v;
    }
    chosen[best] = true;
    alive[best] = false;
    --alive_count;
    // survivors adjacent to a removed vertex lose its weight; only the
    // neighbors of best can be adjacent to best, and they all die here
    for (Vertex u : g.neighbors(best)) {
      if (!alive[u]) continue;
      alive[u] = false;
      --alive_count;
      for (Vertex w : g.neighbors(u)) {
        if (alive[w]) nbhd[w] -= wg.weight(u);
      }
    }
  }
  return VertexSet::from_flags(chosen);
}

bool is_valid_algorithm(std::string_view tag) {
  return std::find(kAlgorithmTags.begin(), kAlgorithmTags.end(), tag) !=
         kAlgorithmTags.end();
}

bool algorithm_is_randomized(std::string_view tag) {
  return tag == "boppana" || tag == "max" || tag == "selkow";
}

bool algorithm_needs_weights(std::string_view tag) {
  return tag == "max" || tag == "gwmin2";
}

namespace {

VertexSet dispatch(std::string_view tag, const WeightedGraph& wg, Rng& rng) {
  const Graph& g = wg.graph();
  if (tag == "boppana") {
    auto ranks = sample_uniform_ranks(g.n(), rng);
    return boppana(g, ranks);
  }
  if (tag == "max") {
    auto ranks = sample_weighted_ranks(wg.weights(), rng);
    return max_alg(wg, ranks);
  }
  if (tag == "selkow") {
    auto ranks = sample_uniform_ranks(g.n(), rng);
    return selkow_two_round(g, ranks);
  }
  if (tag == "greedy-min") return greedy_min_degree(g);
  if (tag == "greedy-max") return greedy_max_degree_removal(g);
  if (tag == "gwmin2") return gwmin2(wg);
  throw std::invalid_argument("unknown algorithm tag '" + std::string(tag) +
                              "'");
}

MonteCarloEstimate estimate(std::string_view tag, const WeightedGraph& wg,
                            bool weighted_value, std::size_t trials,
                            std::uint64_t seed) {
  if (trials < 2) {
    throw std::invalid_argument("monte_carlo: trials must be >= 2");
  }
  if (!is_valid_algorithm(tag)) {
    throw std::invalid_argument("unknown algorithm tag '" + std::string(tag) +
                                "'");
  }
  double sum = 0;
  double sum_sq = 0;
  for (std::size_t i = 0; i < trials; ++i) {
    Rng rng = Rng::for_stream(seed, i);
    const VertexSet s = dispatch(tag, wg, rng);
    const double value = weighted_value
                             ? static_cast<double>(wg.set_weight(s))
                             : static_cast<double>(s.size());
    sum += value;
    sum_sq += value * value;
  }
  MonteCarloEstimate e;
  e.trials = trials;
  e.mean = sum / static_cast<double>(trials);
  const double var =
      std::max(0.0, (sum_sq - sum * e.mean) / static_cast<double>(trials - 1));
  e.stderr_mean = std::sqrt(var / static_cast<double>(trials));
  return e;
}

}  // namespace

RunResult run_algorithm(std::string_view tag, const Graph& g,
                        std::uint64_t seed) {
  return run_algorithm(tag, WeightedGraph::uniform(g), seed);
}

RunResult run_algorithm(std::string_view tag, const WeightedGraph& wg,
                        std::uint64_t seed) {
  if (!is_valid_algorithm(tag)) {
    throw std::invalid_argument("unknown algorithm tag '" + std::string(tag) +
                                "'");
  }
  Rng rng(seed);
  RunResult r;
  r.solution = dispatch(tag, wg, rng);
  r.value = wg.set_weight(r.solution);
  r.seed = seed;
  r.algorithm = std::string(tag);
  return r;
}

MonteCarloEstimate monte_carlo(std::string_view tag, const Graph& g,
                               std::size_t trials, std::uint64_t seed) {
  if (algorithm_needs_weights(tag)) {
    throw std::invalid_argument("algorithm '" + std::string(tag) +
                                "' requires weights");
  }
  return estimate(tag, WeightedGraph::uniform(g), /*weighted_value=*/false,
                  trials, seed);
}

MonteCarloEstimate monte_carlo(std::string_view tag, const WeightedGraph& wg,
                               std::size_t trials, std::uint64_t seed) {
  return estimate(tag, wg, /*weighted_value=*/true, trials, seed);
}

}  // namespace indset
