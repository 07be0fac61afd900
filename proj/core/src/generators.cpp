#include "indset/generators.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

#include "indset/rng.hpp"

namespace indset {

namespace {

void fisher_yates(std::vector<Vertex>& perm, Rng& rng) {
  for (std::size_t i = perm.size(); i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.next_below(i)]);
  }
}

// delta permutations of 0..side-1 with no column collision, i.e. the
// matchings are pairwise edge-disjoint. Each matching is a uniform random
// permutation, redrawn while it collides with an accepted one. The success
// probability of the k-th draw is about e^-k, so the expected work is
// Theta(e^delta) permutation draws; fine for the delta this library deals
// in, and capped rather than silently degraded beyond that.
std::vector<std::vector<Vertex>> disjoint_matchings(std::size_t delta,
                                                    std::size_t side,
                                                    Rng& rng) {
  std::vector<Vertex> identity(side);
  std::iota(identity.begin(), identity.end(), 0);

  if (delta == side) {
    // the complete bipartite graph is the only instance; emit it directly
    std::vector<std::vector<Vertex>> perms(delta, identity);
    for (std::size_t k = 0; k < delta; ++k) {
      for (std::size_t i = 0; i < side; ++i) {
        perms[k][i] = static_cast<Vertex>((i + k) % side);
      }
    }
    return perms;
  }

  constexpr int kMaxAttemptsPerMatching = 200000;
  std::vector<std::vector<Vertex>> perms;
  perms.reserve(delta);
  while (perms.size() < delta) {
    bool accepted = false;
    for (int attempt = 0; attempt < kMaxAttemptsPerMatching; ++attempt) {
      std::vector<Vertex> p = identity;
      fisher_yates(p, rng);
      bool clash = false;
      for (const auto& q : perms) {
        for (std::size_t i = 0; i < side; ++i) {
          if (p[i] == q[i]) {
            clash = true;
            break;
          }
        }
        if (clash) break;
      }
      if (!clash) {
        perms.push_back(std::move(p));
        accepted = true;
        break;
      }
    }
    if (!accepted) {
      throw std::runtime_error(
          "gen_regular_bipartite: rejection sampling exhausted; degree " +
          std::to_string(delta) + " is too large for this sampler");
    }
  }
  return perms;
}

}  // namespace

Graph gen_clique(std::size_t k) {
  if (k < 1) throw std::invalid_argument("gen_clique: k must be >= 1");
  std::vector<Edge> edges;
  edges.reserve(k * (k - 1) / 2);
  for (Vertex u = 0; u < k; ++u) {
    for (Vertex v = u + 1; v < k; ++v) edges.emplace_back(u, v);
  }
  return Graph::build(k, edges);
}

Graph gen_regular_bipartite(std::size_t delta, std::size_t side,
                            std::uint64_t seed) {
  if (side < 1) {
    throw std::invalid_argument("gen_regular_bipartite: side must be >= 1");
  }
  if (delta > side) {
    throw std::invalid_argument(
        "gen_regular_bipartite: no simple graph with degree " +
        std::to_string(delta) + " on sides of size " + std::to_string(side));
  }
  Rng rng(seed);
  auto perms = disjoint_matchings(delta, side, rng);
  std::vector<Edge> edges;
  edges.reserve(delta * side);
  for (const auto& p : perms) {
    for (std::size_t i = 0; i < side; ++i) {
      edges.emplace_back(static_cast<Vertex>(i),
                         static_cast<Vertex>(side + p[i]));
    }
  }
  return Graph::build(2 * side, edges);
}

std::pair<Graph, std::size_t> gen_turan_tight(std::size_t delta,
                                              std::uint64_t seed) {
  if (delta < 1) throw std::invalid_argument("gen_turan_tight: delta >= 1");
  const std::size_t side = 2 * delta - 1;
  Graph bip = gen_regular_bipartite(delta, side, seed);
  // append the two isolated vertices
  Graph g = Graph::build(2 * side + 2, bip.edges());
  return {std::move(g), 2 * delta + 1};
}

WeightedGraph gen_weighted_bipartite(std::size_t delta, std::size_t side,
                                     Weight beta_num, Weight beta_den,
                                     std::uint64_t seed) {
  if (beta_num < 1 || beta_den < 1 || beta_num > beta_den) {
    throw std::invalid_argument(
        "gen_weighted_bipartite: need 0 < beta_num/beta_den <= 1");
  }
  Graph g = gen_regular_bipartite(delta, side, seed);
  std::vector<Weight> weights(2 * side);
  std::fill(weights.begin(), weights.begin() + side, beta_den);
  std::fill(weights.begin() + side, weights.end(), beta_num);
  return WeightedGraph::build(std::move(g), std::move(weights));
}

WeightedGraph gen_weighted_complete_bipartite(std::size_t n_side, Weight q) {
  if (n_side < 1 || q < 1) {
    throw std::invalid_argument(
        "gen_weighted_complete_bipartite: need n_side >= 1 and q >= 1");
  }
  std::vector<Edge> edges;
  edges.reserve(n_side * n_side);
  for (Vertex u = 0; u < n_side; ++u) {
    for (Vertex v = 0; v < n_side; ++v) {
      edges.emplace_back(u, static_cast<Vertex>(n_side + v));
    }
  }
  Graph g = Graph::build(2 * n_side, edges);
  std::vector<Weight> weights(2 * n_side, 1);
  std::fill(weights.begin() + n_side, weights.end(), q);
  return WeightedGraph::build(std::move(g), std::move(weights));
}

Graph gen_gnp(std::size_t n, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("gen_gnp: p must be in [0,1]");
  }
  std::vector<Edge> edges;
  if (p >= 1.0) {
    return n >= 1 ? gen_clique(n) : Graph::build(0, {});
  }
  if (p > 0.0 && n >= 2) {
    // geometric skipping over the n*(n-1)/2 pair slots
    Rng rng(seed);
    const double log_1mp = std::log1p(-p);
    const std::size_t total = n * (n - 1) / 2;
    std::size_t pos = 0;
    for (;;) {
      const double u = rng.next_unit();
      const double skip = std::floor(std::log(u) / log_1mp);
      if (skip >= static_cast<double>(total - pos)) break;
      pos += static_cast<std::size_t>(skip);
      // slot -> pair, with u the larger index: slot = u*(u-1)/2 + v
      const std::size_t u_idx = static_cast<std::size_t>(
          (1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(pos))) / 2.0);
      std::size_t uu = u_idx;
      while (uu * (uu - 1) / 2 > pos) --uu;
      while ((uu + 1) * uu / 2 <= pos) ++uu;
      const std::size_t vv = pos - uu * (uu - 1) / 2;
      edges.emplace_back(static_cast<Vertex>(vv), static_cast<Vertex>(uu));
      if (++pos >= total) break;
    }
  }
  return Graph::build(n, edges);
}

}  // namespace indset
