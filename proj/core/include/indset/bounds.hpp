#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "indset/graph.hpp"
#include "indset/rational.hpp"

namespace indset {

// Guaranteed independent-set sizes computable from degrees alone, and the
// closed-form worst-case ratios between those guarantees and the optimum.

/// n/(dbar+1) = n^2/(2m+n). Requires n >= 1.
Rational turan_bound_exact(const Graph& g);
double turan_bound(const Graph& g);

/// sum_v 1/(d(v)+1). At least the Turan bound on every graph, with equality
/// exactly on regular graphs.
Rational caro_wei_exact(const Graph& g);
double caro_wei(const Graph& g);

/// sum_v w(v)^2 / w(N[v]); equals caro_wei when all weights are 1. Always at
/// least w(V)/(max_degree+1).
Rational weighted_nbhd_bound_exact(const WeightedGraph& wg);
double weighted_nbhd_bound(const WeightedGraph& wg);

/// Worst-case alpha/cw over graphs of maximum degree delta: (delta+1)/2.
Rational cw_ratio_exact(std::size_t delta);
double cw_ratio(std::size_t delta);

/// Worst-case alpha/turan: (2*delta+1)^2/(8*delta), i.e. cw_ratio + 1/(8*delta).
Rational turan_ratio_exact(std::size_t delta);
double turan_ratio(std::size_t delta);

/// Worst-case alpha/cw in terms of average degree: (dbar+2)/(4(sqrt(2)-1)).
double sparse_ratio(double avg_degree);

/// Reciprocal performance of cw on bipartite graphs with regular sides, the
/// larger side holding a tau fraction of the vertices:
///   tau/(dbar/2+tau) + ((1-tau)^2/tau)/(dbar/2+1-tau).
/// Requires 1/2 <= tau < 1 and dbar > 0.
double inv_perf_bipartite(double tau, double avg_degree);

struct RhoResult {
  double rho = 0;        // 1 / min_value
  double argmin = 0;     // minimizing x in (0,1]
  double min_value = 0;  // min of x^2/(delta+x) + 1/(x*delta+1)
};

/// Tight performance ratio of the weight-tilted rank rule, defined by
/// 1/rho = min_{0<x<=1} (x^2/(delta+x) + 1/(x*delta+1)). The objective is not
/// known to be unimodal, so a dense 1000-point grid scan brackets the minimum
/// before golden-section refinement down to `tol` on x.
RhoResult rho(double delta, double tol = 1e-9);

/// Large-delta limit of rho: 2^(2/3)*(delta+1)/3, about 0.529*(delta+1).
double rho_asymptotic(double delta);

/// a/(Y+t*X) + b/(Z+(1-t)*X) for a > b > 0, Z - Y >= X > 0, t in [0,1].
/// Nonincreasing in t, so minimized at t = 1. Exposed for property tests.
double eval_lemma_technical(double a, double b, double Y, double Z, double X,
                            double t);

struct BoundReport {
  std::size_t n = 0;
  std::size_t m = 0;
  std::size_t max_degree = 0;
  Rational avg_degree;
  Rational turan;
  Rational caro_wei;
  std::optional<Rational> weighted_nbhd;
};

BoundReport compute_bound_report(const Graph& g);
BoundReport compute_bound_report(const WeightedGraph& wg);

struct RatioRow {
  std::size_t delta = 0;
  double cw_ratio = 0;
  double turan_ratio = 0;
  double rho = 0;
  double argmin_x = 0;
  double rho_over_delta_plus_1 = 0;
};

std::vector<RatioRow> sweep_rho(std::size_t delta_lo, std::size_t delta_hi,
                                double tol = 1e-9);

/// CSV with header delta,cw_ratio,turan_ratio,rho,argmin_x,rho_over_delta_plus_1.
void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows);

}  // namespace indset
