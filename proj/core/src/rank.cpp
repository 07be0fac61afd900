#include "indset/rank.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>

namespace indset {

namespace {

template <typename Key>
bool has_duplicates(std::vector<Key> keys) {
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

}  // namespace

std::uint64_t RankAssignment::order_key_bits(Vertex v) const {
  if (mode == Mode::uniform) return ukey[v];
  // order-preserving embedding of double into uint64
  const auto bits = std::bit_cast<std::uint64_t>(wkey[v]);
  return (bits & 0x8000000000000000ULL) ? ~bits
                                        : bits | 0x8000000000000000ULL;
}

RankAssignment RankAssignment::from_keys(std::vector<double> keys) {
  RankAssignment r;
  r.mode = Mode::weighted;
  r.wkey = std::move(keys);
  return r;
}

RankAssignment sample_uniform_ranks(std::size_t n, Rng& rng) {
  RankAssignment r;
  r.mode = RankAssignment::Mode::uniform;
  r.ukey.resize(n);
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (auto& k : r.ukey) k = rng.next_u64();
    if (!has_duplicates(r.ukey)) return r;
  }
  throw std::runtime_error("sample_uniform_ranks: persistent key collisions");
}

RankAssignment sample_weighted_ranks(const std::vector<Weight>& weights,
                                     Rng& rng) {
  RankAssignment r;
  r.mode = RankAssignment::Mode::weighted;
  r.wkey.resize(weights.size());
  for (int attempt = 0; attempt < 100; ++attempt) {
    for (std::size_t v = 0; v < weights.size(); ++v) {
      // ln(x)/w: same order as x^(1/w), safe for huge weights
      r.wkey[v] = std::log(rng.next_unit()) / static_cast<double>(weights[v]);
    }
    if (!has_duplicates(r.wkey)) return r;
  }
  throw std::runtime_error("sample_weighted_ranks: persistent key collisions");
}

RankAssignment sample_ranks(std::size_t n, RankAssignment::Mode mode,
                            const std::vector<Weight>* weights, Rng& rng) {
  if (mode == RankAssignment::Mode::uniform) {
    return sample_uniform_ranks(n, rng);
  }
  if (weights == nullptr || weights->size() != n) {
    throw std::invalid_argument("sample_ranks: weighted mode requires weights");
  }
  return sample_weighted_ranks(*weights, rng);
}

RankAssignment sample_ranks(const Graph& g, RankAssignment::Mode mode,
                            const std::vector<Weight>* weights,
                            std::uint64_t seed) {
  Rng rng(seed);
  return sample_ranks(g.n(), mode, weights, rng);
}

RankAssignment sample_ranks(const WeightedGraph& wg, std::uint64_t seed) {
  Rng rng(seed);
  return sample_ranks(wg.graph().n(), RankAssignment::Mode::weighted,
                      &wg.weights(), rng);
}

}  // namespace indset
