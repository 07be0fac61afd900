#include <benchmark/benchmark.h>

#include "indset/algorithms.hpp"
#include "indset/bounds.hpp"
#include "indset/distsim.hpp"
#include "indset/exact.hpp"
#include "indset/generators.hpp"

using namespace indset;

static void BM_boppana(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const Graph g = gen_gnp(n, 10.0 / static_cast<double>(n), 1);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto ranks =
        sample_ranks(g, RankAssignment::Mode::uniform, nullptr, ++seed);
    benchmark::DoNotOptimize(boppana(g, ranks));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_boppana)->Range(1 << 10, 1 << 17)->Complexity();

static void BM_stream_run(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const Graph g = gen_gnp(n, 10.0 / static_cast<double>(n), 2);
  const auto edges = g.edges();
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(stream_run(
        n, edges, RankAssignment::Mode::uniform, nullptr, ++seed));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_stream_run)->Range(1 << 10, 1 << 17)->Complexity();

static void BM_greedy_min_degree(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const Graph g = gen_gnp(n, 10.0 / static_cast<double>(n), 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(greedy_min_degree(g));
  }
  state.SetComplexityN(n);
}
BENCHMARK(BM_greedy_min_degree)->Range(1 << 10, 1 << 16)->Complexity();

static void BM_exact_oracle(benchmark::State& state) {
  const Graph g = gen_gnp(state.range(0), 0.3, 4);
  for (auto _ : state) {
    benchmark::DoNotOptimize(exact_max_is(g));
  }
}
BENCHMARK(BM_exact_oracle)->DenseRange(20, 40, 5);

static void BM_rho(benchmark::State& state) {
  const double delta = static_cast<double>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(rho(delta));
  }
}
BENCHMARK(BM_rho)->Arg(2)->Arg(100)->Arg(1000000);

static void BM_caro_wei_exact(benchmark::State& state) {
  const std::size_t n = state.range(0);
  const Graph g = gen_gnp(n, 10.0 / static_cast<double>(n), 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(caro_wei_exact(g));
  }
}
BENCHMARK(BM_caro_wei_exact)->Range(1 << 10, 1 << 16);

BENCHMARK_MAIN();
