#include "indset/bounds.hpp"

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace indset {

Rational turan_bound_exact(const Graph& g) {
  if (g.n() < 1) throw std::invalid_argument("turan_bound: empty graph");
  const mpz_class n(static_cast<unsigned long>(g.n()));
  const mpz_class m(static_cast<unsigned long>(g.m()));
  return make_rational(n * n, 2 * m + n);
}

double turan_bound(const Graph& g) { return to_double(turan_bound_exact(g)); }

Rational caro_wei_exact(const Graph& g) {
  // group by degree; at most max_degree+1 rational additions
  std::vector<std::size_t> hist(g.max_degree() + 1, 0);
  for (Vertex v = 0; v < g.n(); ++v) hist[g.degree(v)]++;
  Rational sum(0);
  for (std::size_t d = 0; d < hist.size(); ++d) {
    if (hist[d] == 0) continue;
    sum += make_rational(mpz_class(static_cast<unsigned long>(hist[d])),
                         mpz_class(static_cast<unsigned long>(d + 1)));
  }
  return sum;
}

double caro_wei(const Graph& g) { return to_double(caro_wei_exact(g)); }

Rational weighted_nbhd_bound_exact(const WeightedGraph& wg) {
  const Graph& g = wg.graph();
  Rational sum(0);
  for (Vertex v = 0; v < g.n(); ++v) {
    const mpz_class w(static_cast<long>(wg.weight(v)));
    const mpz_class nbhd(static_cast<long>(wg.closed_nbhd_weight(v)));
    sum += make_rational(w * w, nbhd);
  }
  // w(N[v]) <= (max_degree+1) * max weight termwise, hence the global bound
  if (g.n() > 0) {
    const Rational floor_bound =
        make_rational(mpz_class(static_cast<long>(wg.total_weight())),
                      mpz_class(static_cast<unsigned long>(g.max_degree() + 1)));
    if (sum < floor_bound) {
      throw std::logic_error("weighted_nbhd_bound: below w(V)/(max_degree+1)");
    }
  }
  return sum;
}

double weighted_nbhd_bound(const WeightedGraph& wg) {
  const Graph& g = wg.graph();
  long double sum = 0.0L;
  for (Vertex v = 0; v < g.n(); ++v) {
    const long double w = static_cast<long double>(wg.weight(v));
    sum += w * w / static_cast<long double>(wg.closed_nbhd_weight(v));
  }
  return static_cast<double>(sum);
}

Rational cw_ratio_exact(std::size_t delta) {
  if (delta < 1) throw std::invalid_argument("cw_ratio: delta must be >= 1");
  return make_rational(mpz_class(static_cast<unsigned long>(delta + 1)),
                       mpz_class(2));
}

double cw_ratio(std::size_t delta) { return to_double(cw_ratio_exact(delta)); }

Rational turan_ratio_exact(std::size_t delta) {
  if (delta < 1) throw std::invalid_argument("turan_ratio: delta must be >= 1");
  const mpz_class d(static_cast<unsigned long>(delta));
  return make_rational((2 * d + 1) * (2 * d + 1), 8 * d);
}

double turan_ratio(std::size_t delta) {
  return to_double(turan_ratio_exact(delta));
}

double sparse_ratio(double avg_degree) {
  if (avg_degree < 0) {
    throw std::invalid_argument("sparse_ratio: avg_degree must be >= 0");
  }
  return (avg_degree + 2.0) / (4.0 * (std::sqrt(2.0) - 1.0));
}

double inv_perf_bipartite(double tau, double avg_degree) {
  if (!(tau >= 0.5 && tau < 1.0)) {
    throw std::invalid_argument("inv_perf_bipartite: tau must be in [1/2, 1)");
  }
  if (!(avg_degree > 0.0)) {
    throw std::invalid_argument("inv_perf_bipartite: avg_degree must be > 0");
  }
  const double half = avg_degree / 2.0;
  return tau / (half + tau) +
         ((1.0 - tau) * (1.0 - tau) / tau) / (half + 1.0 - tau);
}

namespace {

double rho_objective(double x, double delta) {
  return x * x / (delta + x) + 1.0 / (x * delta + 1.0);
}

}  // namespace

RhoResult rho(double delta, double tol) {
  if (!(delta >= 1.0)) throw std::invalid_argument("rho: delta must be >= 1");
  if (!(tol > 0.0)) throw std::invalid_argument("rho: tol must be > 0");

  constexpr int kGridPoints = 1000;
  int best_i = 1;
  double best_f = rho_objective(1.0 / kGridPoints, delta);
  for (int i = 2; i <= kGridPoints; ++i) {
    const double f = rho_objective(static_cast<double>(i) / kGridPoints, delta);
    if (f < best_f) {
      best_f = f;
      best_i = i;
    }
  }
  double lo = static_cast<double>(std::max(1, best_i - 1)) / kGridPoints;
  double hi = static_cast<double>(std::min(kGridPoints, best_i + 1)) / kGridPoints;

  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - inv_phi * (hi - lo);
  double d = lo + inv_phi * (hi - lo);
  double fc = rho_objective(c, delta);
  double fd = rho_objective(d, delta);
  while (hi - lo > tol) {
    if (fc < fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - inv_phi * (hi - lo);
      fc = rho_objective(c, delta);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + inv_phi * (hi - lo);
      fd = rho_objective(d, delta);
    }
  }
  RhoResult r;
  r.argmin = (lo + hi) / 2.0;
  r.min_value = rho_objective(r.argmin, delta);
  r.rho = 1.0 / r.min_value;
  return r;
}

double rho_asymptotic(double delta) {
  if (!(delta >= 1.0)) {
    throw std::invalid_argument("rho_asymptotic: delta must be >= 1");
  }
  return std::cbrt(4.0) * (delta + 1.0) / 3.0;
}

double eval_lemma_technical(double a, double b, double Y, double Z, double X,
                            double t) {
  if (!(a > b && b > 0)) {
    throw std::invalid_argument("eval_lemma_technical: need a > b > 0");
  }
  if (!(X > 0 && Y > 0 && Z > 0 && Z - Y >= X)) {
    throw std::invalid_argument(
        "eval_lemma_technical: need Y,Z,X > 0 and Z - Y >= X");
  }
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::invalid_argument("eval_lemma_technical: t must be in [0,1]");
  }
  return a / (Y + t * X) + b / (Z + (1.0 - t) * X);
}

BoundReport compute_bound_report(const Graph& g) {
  BoundReport r;
  r.n = g.n();
  r.m = g.m();
  r.max_degree = g.max_degree();
  r.avg_degree = g.avg_degree_exact();
  r.turan = turan_bound_exact(g);
  r.caro_wei = caro_wei_exact(g);
  return r;
}

BoundReport compute_bound_report(const WeightedGraph& wg) {
  BoundReport r = compute_bound_report(wg.graph());
  r.weighted_nbhd = weighted_nbhd_bound_exact(wg);
  return r;
}

std::vector<RatioRow> sweep_rho(std::size_t delta_lo, std::size_t delta_hi,
                                double tol) {
  if (delta_lo < 1 || delta_hi < delta_lo) {
    throw std::invalid_argument("sweep_rho: need 1 <= delta_lo <= delta_hi");
  }
  std::vector<RatioRow> rows;
  rows.reserve(delta_hi - delta_lo + 1);
  for (std::size_t d = delta_lo; d <= delta_hi; ++d) {
    const RhoResult r = rho(static_cast<double>(d), tol);
    RatioRow row;
    row.delta = d;
    row.cw_ratio = cw_ratio(d);
    row.turan_ratio = turan_ratio(d);
    row.rho = r.rho;
    row.argmin_x = r.argmin;
    row.rho_over_delta_plus_1 = r.rho / static_cast<double>(d + 1);
    rows.push_back(row);
  }
  return rows;
}

void write_ratio_csv(std::ostream& out, const std::vector<RatioRow>& rows) {
  out << "delta,cw_ratio,turan_ratio,rho,argmin_x,rho_over_delta_plus_1\n";
  char buf[256];
  for (const auto& r : rows) {
    std::snprintf(buf, sizeof(buf), "%zu,%.10g,%.10g,%.10g,%.10g,%.10g\n",
                  r.delta, r.cw_ratio, r.turan_ratio, r.rho, r.argmin_x,
                  r.rho_over_delta_plus_1);
    out << buf;
  }
}

}  // namespace indset
