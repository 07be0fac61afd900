#include <cmath>
#include <sstream>

#include "doctest.h"
#include "indset/bounds.hpp"
#include "indset/exact.hpp"
#include "indset/generators.hpp"
#include "indset/rng.hpp"
#include "support/corpus.hpp"

using namespace indset;

TEST_CASE("turan bound") {
  CHECK(turan_bound_exact(gen_clique(4)) == make_rational(1));
  const auto [tt, alpha] = gen_turan_tight(3, 1);
  CHECK(turan_bound_exact(tt) == make_rational(24, 7));
  CHECK(turan_bound_exact(Graph::build(5, {})) == make_rational(5));
  CHECK_THROWS_AS(turan_bound_exact(Graph::build(0, {})),
                  std::invalid_argument);
}

TEST_CASE("caro-wei bound") {
  for (std::size_t delta = 1; delta <= 6; ++delta) {
    CHECK(caro_wei_exact(gen_clique(delta + 1)) == make_rational(1));
  }
  const Graph p3 = Graph::build(3, {{0, 1}, {1, 2}});
  CHECK(caro_wei_exact(p3) == make_rational(4, 3));
  CHECK(caro_wei(test::petersen()) == 2.5);
}

TEST_CASE("caro-wei dominates turan, equality exactly on regular graphs") {
  Rng rng(7);
  for (int i = 0; i < 200; ++i) {
    const Graph g = test::random_graph(rng, 2, 40, 0.05, 0.6);
    const Rational cw = caro_wei_exact(g);
    const Rational t = turan_bound_exact(g);
    CHECK(t > 0);
    CHECK(cw >= t);
    CHECK(cw <= make_rational(static_cast<long>(g.n())));
  }
  // regular instances: equality, both equal n/(delta+1)
  for (std::size_t delta : {2, 3, 5}) {
    const Graph g = gen_regular_bipartite(delta, 9, delta);
    const Rational expect = make_rational(static_cast<long>(g.n()),
                                          static_cast<long>(delta + 1));
    CHECK(caro_wei_exact(g) == expect);
    CHECK(turan_bound_exact(g) == expect);
  }
}

TEST_CASE("weighted neighborhood bound") {
  const Graph edge = Graph::build(2, {{0, 1}});
  const WeightedGraph we = WeightedGraph::build(edge, {3, 1});
  CHECK(weighted_nbhd_bound_exact(we) == make_rational(5, 2));
  CHECK(weighted_nbhd_bound(we) == doctest::Approx(2.5));

  // all weights 1: identical to caro-wei
  Rng rng(13);
  for (int i = 0; i < 50; ++i) {
    const Graph g = test::random_graph(rng, 2, 30, 0.1, 0.6);
    CHECK(weighted_nbhd_bound_exact(WeightedGraph::uniform(g)) ==
          caro_wei_exact(g));
  }

  const WeightedGraph k33 = gen_weighted_complete_bipartite(3, 9);
  CHECK(weighted_nbhd_bound_exact(k33) == make_rational(285, 14));

  // always at least w(V)/(max_degree+1)
  for (int i = 0; i < 100; ++i) {
    const Graph g = test::random_graph(rng, 2, 30, 0.1, 0.6);
    const WeightedGraph wg =
        WeightedGraph::build(g, test::random_weights(rng, g.n(), 1, 50));
    const Rational floor = make_rational(
        static_cast<long>(wg.total_weight()),
        static_cast<long>(g.max_degree() + 1));
    CHECK(weighted_nbhd_bound_exact(wg) >= floor);
  }
}

TEST_CASE("ratio formulas") {
  CHECK(cw_ratio(1) == 1.0);
  CHECK(cw_ratio(3) == 2.0);
  CHECK(cw_ratio(9) == 5.0);
  CHECK(turan_ratio_exact(3) == make_rational(49, 24));
  CHECK(turan_ratio_exact(1) == make_rational(9, 8));
  for (std::size_t delta = 1; delta <= 100; ++delta) {
    CHECK(turan_ratio_exact(delta) - cw_ratio_exact(delta) ==
          make_rational(1, static_cast<long>(8 * delta)));
  }
  CHECK_THROWS_AS(cw_ratio(0), std::invalid_argument);
  CHECK_THROWS_AS(turan_ratio(0), std::invalid_argument);
}

TEST_CASE("sparse ratio") {
  const double c = 4.0 * (std::sqrt(2.0) - 1.0);
  CHECK(std::abs(c - 1.657) < 2e-4);  // the usual rounded constant
  CHECK(sparse_ratio(0) == doctest::Approx(2.0 / c).epsilon(1e-12));
  CHECK(sparse_ratio(0) == doctest::Approx(1.2071).epsilon(1e-4));
  CHECK(sparse_ratio(2) == doctest::Approx(std::sqrt(2.0) + 1.0).epsilon(1e-12));
  CHECK_THROWS_AS(sparse_ratio(-0.1), std::invalid_argument);
}

TEST_CASE("inv_perf_bipartite") {
  // symmetric sides: 2/(dbar+1)
  for (double dbar : {1.0, 2.0, 3.5, 10.0}) {
    CHECK(inv_perf_bipartite(0.5, dbar) ==
          doctest::Approx(2.0 / (dbar + 1.0)).epsilon(1e-12));
  }
  CHECK_THROWS_AS(inv_perf_bipartite(0.4, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(inv_perf_bipartite(1.0, 2.0), std::invalid_argument);
  CHECK_THROWS_AS(inv_perf_bipartite(0.6, 0.0), std::invalid_argument);

  // concrete two-sided regular instance: B_j adjacent to A_{2j}, A_{2j+1};
  // tau = 2/3, dbar = 4/3, cw = 4, alpha = 6
  const Graph g = Graph::build(
      9, {{0, 6}, {1, 6}, {2, 7}, {3, 7}, {4, 8}, {5, 8}});
  CHECK(exact_max_is(g).value == 6);
  const double tau = 2.0 / 3.0;
  const double dbar = to_double(g.avg_degree_exact());
  CHECK(caro_wei(g) / 6.0 ==
        doctest::Approx(inv_perf_bipartite(tau, dbar)).epsilon(1e-12));

  // tau = 1/sqrt(2) approaches the sparse-ratio constant for large dbar
  const double tau_star = 1.0 / std::sqrt(2.0);
  for (double d : {2.0, 10.0, 1e3, 1e6}) {
    const double asym = 4.0 * (std::sqrt(2.0) - 1.0) / (d + 2.0);
    CHECK(inv_perf_bipartite(tau_star, d) >= asym);
  }
  CHECK(inv_perf_bipartite(tau_star, 1e6) ==
        doctest::Approx(4.0 * (std::sqrt(2.0) - 1.0) / (1e6 + 2.0))
            .epsilon(1e-5));
}

TEST_CASE("rho minimization") {
  const RhoResult r2 = rho(2);
  CHECK(std::abs(r2.min_value - 0.593) < 1e-3);
  CHECK(r2.min_value == doctest::Approx(0.592996853544).epsilon(1e-9));
  CHECK(r2.rho == doctest::Approx(1.68634958857).epsilon(1e-9));
  CHECK(r2.argmin == doctest::Approx(0.604111778579).epsilon(1e-6));
  CHECK(r2.rho / 3.0 == doctest::Approx(0.562).epsilon(1e-3));

  // delta = 1 has the closed-form minimizer sqrt(2)-1
  const RhoResult r1 = rho(1);
  CHECK(r1.argmin == doctest::Approx(std::sqrt(2.0) - 1.0).epsilon(1e-7));
  CHECK(r1.rho ==
        doctest::Approx((std::sqrt(2.0) + 1.0) / 2.0).epsilon(1e-9));

  const RhoResult r3 = rho(3);
  CHECK(r3.rho == doctest::Approx(2.20001783486).epsilon(1e-9));
  CHECK(r3.argmin == doctest::Approx(0.669344531897).epsilon(1e-6));

  CHECK_THROWS_AS(rho(0.5), std::invalid_argument);
  CHECK_THROWS_AS(rho(2, -1.0), std::invalid_argument);
}

TEST_CASE("rho asymptotics") {
  const double limit = std::cbrt(4.0) / 3.0;  // 2^(2/3)/3
  CHECK(limit == doctest::Approx(0.5291336840).epsilon(1e-9));
  CHECK(rho_asymptotic(2) == doctest::Approx(std::cbrt(4.0)).epsilon(1e-12));
  for (std::size_t d : {1, 2, 5, 17, 100}) {
    CHECK(rho_asymptotic(d) / (d + 1.0) == doctest::Approx(limit));
  }

  const RhoResult big = rho(1e6);
  CHECK(std::abs(big.rho / (1e6 + 1.0) - limit) < 1e-3);
  CHECK(std::abs(big.argmin - std::pow(2.0, -1.0 / 3.0)) < 1e-2);

  // |rho/(delta+1) - limit| shrinks as delta grows
  double prev = 1.0;
  for (double d : {2.0, 5.0, 10.0, 100.0, 1000.0}) {
    const double gap = std::abs(rho(d).rho / (d + 1.0) - limit);
    CHECK(gap < prev);
    prev = gap;
  }
}

TEST_CASE("rho stability and bracketing") {
  for (double d : {1.0, 2.0, 7.0, 50.0}) {
    CHECK(std::abs(rho(d, 1e-9).rho - rho(d, 1e-12).rho) < 1e-6);
  }
  for (std::size_t d = 1; d <= 50; ++d) {
    const RhoResult r = rho(static_cast<double>(d));
    CHECK(r.rho >= cw_ratio(d) - 1e-9);
    CHECK(r.rho <= static_cast<double>(d) + 1.0);
    CHECK(r.argmin > 0.0);
    CHECK(r.argmin <= 1.0);
  }
}

TEST_CASE("technical lemma evaluator") {
  // minimum claimed at t = 1
  CHECK(eval_lemma_technical(2, 1, 1, 3, 1, 1) ==
        doctest::Approx(2.0 / 2.0 + 1.0 / 3.0).epsilon(1e-12));
  CHECK(eval_lemma_technical(2, 1, 1, 3, 1, 0) == doctest::Approx(2.25));
  CHECK(eval_lemma_technical(2, 1, 1, 3, 1, 0) >=
        eval_lemma_technical(2, 1, 1, 3, 1, 1));

  CHECK_THROWS_AS(eval_lemma_technical(1, 2, 1, 3, 1, 0.5),
                  std::invalid_argument);  // a <= b
  CHECK_THROWS_AS(eval_lemma_technical(2, 1, 1, 3, 3, 0.5),
                  std::invalid_argument);  // Z - Y < X
  CHECK_THROWS_AS(eval_lemma_technical(2, 1, 1, 3, 1, 1.5),
                  std::invalid_argument);  // t out of range

  // nonincreasing in t across random valid parameter tuples
  Rng rng(31);
  for (int i = 0; i < 100; ++i) {
    const double b = 0.1 + 5.0 * rng.next_unit();
    const double a = b + 0.05 + 5.0 * rng.next_unit();
    const double y = 0.1 + 5.0 * rng.next_unit();
    const double x = 0.1 + 5.0 * rng.next_unit();
    const double z = y + x + 5.0 * rng.next_unit();
    double prev = eval_lemma_technical(a, b, y, z, x, 0.0);
    for (int k = 1; k < 100; ++k) {
      const double t = static_cast<double>(k) / 99.0;
      const double cur = eval_lemma_technical(a, b, y, z, x, t);
      CHECK(cur <= prev);
      prev = cur;
    }
  }
}

TEST_CASE("cauchy-schwarz lemma as a numeric property") {
  Rng rng(41);
  for (int i = 0; i < 10000; ++i) {
    const std::size_t len = 1 + rng.next_below(12);
    double lhs = 0, sw = 0, sx = 0;
    for (std::size_t k = 0; k < len; ++k) {
      const double w = 0.1 + 10.0 * rng.next_unit();
      const double x = 0.1 + 10.0 * rng.next_unit();
      lhs += w * w / x;
      sw += w;
      sx += x;
    }
    CHECK(lhs >= (sw * sw / sx) * (1.0 - 1e-12));
  }
}

TEST_CASE("bound report") {
  const auto [tt, alpha] = gen_turan_tight(3, 2);
  const BoundReport r = compute_bound_report(tt);
  CHECK(r.n == 12);
  CHECK(r.m == 15);
  CHECK(r.max_degree == 3);
  CHECK(r.turan == make_rational(24, 7));
  CHECK(r.caro_wei == make_rational(9, 2));
  CHECK(!r.weighted_nbhd.has_value());

  const WeightedGraph k33 = gen_weighted_complete_bipartite(3, 9);
  const BoundReport wr = compute_bound_report(k33);
  REQUIRE(wr.weighted_nbhd.has_value());
  CHECK(*wr.weighted_nbhd == make_rational(285, 14));
}

TEST_CASE("sweep and csv") {
  const auto rows = sweep_rho(2, 20);
  REQUIRE(rows.size() == 19);
  CHECK(rows.front().delta == 2);
  CHECK(rows.back().delta == 20);
  const double limit = std::cbrt(4.0) / 3.0;
  double prev = 1.0;
  for (const auto& row : rows) {
    CHECK(row.rho_over_delta_plus_1 <= prev);
    CHECK(row.rho_over_delta_plus_1 >= limit);
    CHECK(row.rho_over_delta_plus_1 <= 0.563);
    prev = row.rho_over_delta_plus_1;
  }

  std::ostringstream csv;
  write_ratio_csv(csv, rows);
  CHECK(csv.str().rfind(
            "delta,cw_ratio,turan_ratio,rho,argmin_x,rho_over_delta_plus_1\n",
            0) == 0);
  CHECK_THROWS_AS(sweep_rho(3, 2), std::invalid_argument);
}
