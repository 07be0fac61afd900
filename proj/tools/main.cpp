// indset: bounds, one-round algorithms and tight-instance experiments for
// independent sets in bounded-degree graphs.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "gen_spec.hpp"
#include "indset/algorithms.hpp"
#include "indset/bounds.hpp"
#include "indset/distsim.hpp"
#include "indset/exact.hpp"
#include "indset/generators.hpp"
#include "indset/io.hpp"
#include "indset/types.hpp"

using nlohmann::json;
using namespace indset;
using cli::Instance;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitViolation = 2;

struct Output {
  std::string format = "text";  // text | csv | json
  std::string path;             // empty = stdout

  void emit(const std::string& text, const std::string& csv,
            const json& object) const {
    std::string body;
    if (format == "json") {
      body = object.dump(2) + "\n";
    } else if (format == "csv") {
      body = csv;
    } else {
      body = text;
    }
    if (path.empty()) {
      std::cout << body;
    } else {
      std::ofstream out(path);
      if (!out) throw std::runtime_error("cannot open output file " + path);
      out << body;
    }
  }
};

std::string fmt(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10g", x);
  return buf;
}

std::string rational_str(const Rational& q) {
  return to_string(q) + " (" + fmt(to_double(q)) + ")";
}

json rational_json(const Rational& q) {
  return {{"exact", to_string(q)}, {"value", to_double(q)}};
}

struct AlphaInfo {
  Weight alpha = 0;
  std::string source;  // "construction" | "oracle"
};

std::optional<AlphaInfo> resolve_alpha(const Instance& inst,
                                       std::size_t oracle_limit) {
  if (inst.known_alpha) return AlphaInfo{*inst.known_alpha, "construction"};
  if (inst.graph.n() == 0 || inst.graph.n() > oracle_limit) return std::nullopt;
  if (inst.weighted()) {
    return AlphaInfo{exact_max_is(inst.weighted_graph(), oracle_limit).value,
                     "oracle"};
  }
  return AlphaInfo{exact_max_is(inst.graph, oracle_limit).value, "oracle"};
}

struct Guarantee {
  double ratio = 0;
  std::string name;
};

std::optional<Guarantee> guaranteed_ratio(const std::string& alg,
                                          bool weighted, std::size_t delta) {
  if (delta < 1) return std::nullopt;
  if (alg == "max" || alg == "gwmin2") {
    return Guarantee{rho(static_cast<double>(delta)).rho, "rho"};
  }
  if (weighted) {
    if (alg == "boppana") {
      return Guarantee{static_cast<double>(delta) + 1.0, "delta_plus_1"};
    }
    return std::nullopt;  // no weight guarantee for the cardinality rules
  }
  return Guarantee{cw_ratio(delta), "cw_ratio"};
}

Instance resolve_instance(const std::string& graph_path,
                          const std::string& weights_path,
                          const std::string& gen, std::uint64_t seed) {
  if (!gen.empty() && !graph_path.empty()) {
    throw std::invalid_argument("give either --graph or --gen, not both");
  }
  if (!gen.empty()) return cli::parse_gen_spec(gen, seed);
  if (!graph_path.empty()) {
    return cli::load_instance_file(graph_path, weights_path);
  }
  throw std::invalid_argument("missing graph source: --graph FILE or --gen SPEC");
}

json stamp(const std::string& command, std::uint64_t seed) {
  return {{"version", kProjectVersion}, {"command", command}, {"seed", seed}};
}

// ---------------------------------------------------------------- bounds --

int cmd_bounds(const Instance& inst, std::uint64_t seed,
               std::size_t oracle_limit, const Output& out) {
  const Graph& g = inst.graph;
  const BoundReport report = inst.weighted()
                                 ? compute_bound_report(inst.weighted_graph())
                                 : compute_bound_report(g);
  const auto alpha = resolve_alpha(inst, oracle_limit);

  std::ostringstream text;
  text << "source: " << inst.source << "\n"
       << "seed: " << seed << "\n"
       << "n: " << report.n << "\nm: " << report.m << "\n"
       << "max_degree: " << report.max_degree << "\n"
       << "avg_degree: " << rational_str(report.avg_degree) << "\n"
       << "turan_bound: " << rational_str(report.turan) << "\n"
       << "caro_wei: " << rational_str(report.caro_wei) << "\n";
  if (report.weighted_nbhd) {
    text << "weighted_nbhd: " << rational_str(*report.weighted_nbhd) << "\n";
  }
  if (alpha) {
    text << "alpha: " << alpha->alpha << " (" << alpha->source << ")\n";
  }
  json j = stamp("bounds", seed);
  j["config"] = {{"source", inst.source}, {"oracle_limit", oracle_limit}};
  j["result"] = {{"n", report.n},
                 {"m", report.m},
                 {"max_degree", report.max_degree},
                 {"avg_degree", rational_json(report.avg_degree)},
                 {"turan_bound", rational_json(report.turan)},
                 {"caro_wei", rational_json(report.caro_wei)}};
  if (report.weighted_nbhd) {
    j["result"]["weighted_nbhd"] = rational_json(*report.weighted_nbhd);
  }
  if (alpha) {
    j["result"]["alpha"] = alpha->alpha;
    j["result"]["alpha_source"] = alpha->source;
  }
  if (report.max_degree >= 1) {
    const auto r = rho(static_cast<double>(report.max_degree));
    text << "cw_ratio: " << rational_str(cw_ratio_exact(report.max_degree))
         << "\n"
         << "turan_ratio: "
         << rational_str(turan_ratio_exact(report.max_degree)) << "\n"
         << "sparse_ratio: " << fmt(sparse_ratio(to_double(report.avg_degree)))
         << "\n"
         << "rho: " << fmt(r.rho) << " (argmin " << fmt(r.argmin) << ")\n";
    j["result"]["cw_ratio"] = rational_json(cw_ratio_exact(report.max_degree));
    j["result"]["turan_ratio"] =
        rational_json(turan_ratio_exact(report.max_degree));
    j["result"]["sparse_ratio"] = sparse_ratio(to_double(report.avg_degree));
    j["result"]["rho"] = r.rho;
    j["result"]["rho_argmin"] = r.argmin;
  }

  std::ostringstream csv;
  csv << "n,m,max_degree,avg_degree,turan_bound,caro_wei,weighted_nbhd,alpha\n"
      << report.n << ',' << report.m << ',' << report.max_degree << ','
      << fmt(to_double(report.avg_degree)) << ','
      << fmt(to_double(report.turan)) << ',' << fmt(to_double(report.caro_wei))
      << ','
      << (report.weighted_nbhd ? fmt(to_double(*report.weighted_nbhd)) : "")
      << ',' << (alpha ? std::to_string(alpha->alpha) : "") << "\n";

  out.emit(text.str(), csv.str(), j);
  return kExitOk;
}

// ------------------------------------------------------------------- run --

int cmd_run(const Instance& inst, const std::string& alg, std::size_t trials,
            std::uint64_t seed, std::size_t oracle_limit, const Output& out) {
  if (!is_valid_algorithm(alg)) {
    throw std::invalid_argument("unknown algorithm tag '" + alg + "'");
  }
  const Graph& g = inst.graph;
  const bool weighted = inst.weighted();
  const WeightedGraph wg = inst.weighted_graph();
  const bool randomized = algorithm_is_randomized(alg);

  double mean = 0, se = 0;
  if (randomized) {
    const auto est = monte_carlo(alg, wg, trials, seed);
    mean = est.mean;
    se = est.stderr_mean;
  } else {
    mean = static_cast<double>(run_algorithm(alg, wg, seed).value);
    se = 0;
    trials = 1;
  }

  const auto alpha = resolve_alpha(inst, oracle_limit);
  const auto guarantee = guaranteed_ratio(alg, weighted, g.max_degree());
  std::optional<double> achieved;
  bool violation = false;
  double band = 0;
  if (alpha && mean > 0) {
    achieved = static_cast<double>(alpha->alpha) / mean;
    if (guarantee) {
      band = 4.0 * se * static_cast<double>(alpha->alpha) / (mean * mean);
      violation = *achieved > guarantee->ratio + band + 1e-12;
    }
  }

  std::ostringstream text;
  text << "source: " << inst.source << "\nalgorithm: " << alg
       << "\nseed: " << seed << "\ntrials: " << trials << "\nn: " << g.n()
       << "\nm: " << g.m() << "\nmax_degree: " << g.max_degree() << "\n"
       << "value_kind: " << (weighted ? "weight" : "size") << "\n";
  if (randomized) {
    text << "mean: " << fmt(mean) << "\nstderr: " << fmt(se) << "\n";
    if (alg == "boppana" && !weighted) {
      text << "expected: " << fmt(expected_boppana_size(g)) << "\n";
    }
  } else {
    text << "value: " << fmt(mean) << "\n";
  }
  if (alpha) {
    text << "alpha: " << alpha->alpha << " (" << alpha->source << ")\n";
  } else {
    text << "alpha: unavailable (no construction value; oracle limit "
         << oracle_limit << ")\n";
  }
  if (achieved) text << "achieved_ratio: " << fmt(*achieved) << "\n";
  if (guarantee) {
    text << "guaranteed_ratio: " << fmt(guarantee->ratio) << " ("
         << guarantee->name << ")\n";
  }
  if (violation) text << "violation: achieved ratio exceeds guarantee\n";

  json j = stamp("run", seed);
  j["config"] = {{"source", inst.source},
                 {"alg", alg},
                 {"trials", trials},
                 {"oracle_limit", oracle_limit}};
  j["result"] = {{"n", g.n()},
                 {"m", g.m()},
                 {"max_degree", g.max_degree()},
                 {"value_kind", weighted ? "weight" : "size"},
                 {"mean", mean},
                 {"stderr", se}};
  if (alpha) {
    j["result"]["alpha"] = alpha->alpha;
    j["result"]["alpha_source"] = alpha->source;
  }
  if (achieved) j["result"]["achieved_ratio"] = *achieved;
  if (guarantee) {
    j["result"]["guaranteed_ratio"] = guarantee->ratio;
    j["result"]["guarantee_name"] = guarantee->name;
  }
  j["result"]["violation"] = violation;

  std::ostringstream csv;
  csv << "source,alg,seed,trials,n,m,max_degree,mean,stderr,alpha,achieved_"
         "ratio,guaranteed_ratio\n"
      << inst.source << ',' << alg << ',' << seed << ',' << trials << ','
      << g.n() << ',' << g.m() << ',' << g.max_degree() << ',' << fmt(mean)
      << ',' << fmt(se) << ','
      << (alpha ? std::to_string(alpha->alpha) : "") << ','
      << (achieved ? fmt(*achieved) : "") << ','
      << (guarantee ? fmt(guarantee->ratio) : "") << "\n";

  out.emit(text.str(), csv.str(), j);
  return violation ? kExitViolation : kExitOk;
}

// ----------------------------------------------------------------- tight --

struct TightReport {
  std::string family;
  json detail;
  std::string text;
  bool violation = false;
};

TightReport tight_turan(std::size_t delta, std::uint64_t seed,
                        std::size_t oracle_limit) {
  auto [g, alpha] = gen_turan_tight(delta, seed);
  const Rational turan = turan_bound_exact(g);
  const Rational achieved =
      make_rational(mpz_class(static_cast<unsigned long>(alpha)), 1) / turan;
  const Rational guaranteed = turan_ratio_exact(delta);
  bool ok = achieved == guaranteed;
  std::string alpha_note = "construction";
  if (g.n() <= oracle_limit) {
    ok = ok && exact_max_is(g).value == static_cast<Weight>(alpha);
    alpha_note = "construction, oracle-checked";
  }
  TightReport r;
  r.family = "turan";
  std::ostringstream text;
  text << "family: turan\ndelta: " << delta << "\nn: " << g.n()
       << "\nm: " << g.m() << "\nalpha: " << alpha << " (" << alpha_note
       << ")\nturan_bound: " << rational_str(turan)
       << "\nachieved_ratio: " << rational_str(achieved)
       << "\nguaranteed_ratio: " << rational_str(guaranteed)
       << "\ntight: " << (ok ? "exact" : "VIOLATED") << "\n";
  r.text = text.str();
  r.detail = {{"family", "turan"},
              {"delta", delta},
              {"n", g.n()},
              {"m", g.m()},
              {"alpha", alpha},
              {"turan_bound", rational_json(turan)},
              {"achieved_ratio", rational_json(achieved)},
              {"guaranteed_ratio", rational_json(guaranteed)},
              {"tight", ok}};
  r.violation = !ok;
  return r;
}

TightReport tight_cw_regular_bipartite(std::size_t delta, std::size_t side,
                                       std::uint64_t seed,
                                       std::size_t oracle_limit) {
  const Graph g = gen_regular_bipartite(delta, side, seed);
  const Rational cw = caro_wei_exact(g);
  const Rational expected_cw =
      make_rational(mpz_class(static_cast<unsigned long>(g.n())),
                    mpz_class(static_cast<unsigned long>(delta + 1)));
  const Weight alpha = static_cast<Weight>(side);
  const Rational achieved = make_rational(mpz_class(static_cast<long>(alpha)), 1) / cw;
  const Rational guaranteed = cw_ratio_exact(delta);
  bool ok = (cw == expected_cw) && (achieved == guaranteed);
  std::string alpha_note = "construction";
  if (g.n() <= oracle_limit) {
    ok = ok && exact_max_is(g).value == alpha;
    alpha_note = "construction, oracle-checked";
  }
  TightReport r;
  r.family = "cw-regular-bipartite";
  std::ostringstream text;
  text << "family: cw-regular-bipartite\ndelta: " << delta
       << "\nside: " << side << "\nn: " << g.n() << "\nm: " << g.m()
       << "\nalpha: " << alpha << " (" << alpha_note
       << ")\ncaro_wei: " << rational_str(cw)
       << "\nachieved_ratio: " << rational_str(achieved)
       << "\nguaranteed_ratio: " << rational_str(guaranteed)
       << "\ntight: " << (ok ? "exact" : "VIOLATED") << "\n";
  r.text = text.str();
  r.detail = {{"family", "cw-regular-bipartite"},
              {"delta", delta},
              {"side", side},
              {"alpha", alpha},
              {"caro_wei", rational_json(cw)},
              {"achieved_ratio", rational_json(achieved)},
              {"guaranteed_ratio", rational_json(guaranteed)},
              {"tight", ok}};
  r.violation = !ok;
  return r;
}

TightReport tight_weighted_bipartite(std::size_t delta, std::size_t side,
                                     std::optional<std::pair<Weight, Weight>> beta,
                                     std::size_t trials, std::uint64_t seed) {
  const RhoResult rr = rho(static_cast<double>(delta));
  Weight num = 0, den = 1000;
  if (beta) {
    num = beta->first;
    den = beta->second;
  } else {
    num = static_cast<Weight>(std::lround(rr.argmin * 1000.0));
  }
  const WeightedGraph wg = gen_weighted_bipartite(delta, side, num, den, seed);

  // E[w(MAX)] on this family is the closed form side*(a^2/(a+delta*b) +
  // b^2/(b+delta*a)), which is the neighborhood-sum bound evaluated on the
  // instance.
  const Rational target = weighted_nbhd_bound_exact(wg);
  const double target_d = to_double(target);
  const Weight w_opt = static_cast<Weight>(side) * den;

  const auto est = monte_carlo("max", wg, trials, seed);
  const double band = 4.0 * est.stderr_mean;
  const bool mean_ok = std::abs(est.mean - target_d) <= band;

  const double achieved = static_cast<double>(w_opt) / est.mean;
  const double ratio_band =
      4.0 * est.stderr_mean * static_cast<double>(w_opt) / (est.mean * est.mean);
  const bool ratio_ok = std::abs(achieved - rr.rho) <= ratio_band;

  TightReport r;
  r.family = "weighted-bipartite";
  std::ostringstream text;
  text << "family: weighted-bipartite\ndelta: " << delta << "\nside: " << side
       << "\nbeta: " << num << "/" << den << "\ntrials: " << trials
       << "\nseed: " << seed << "\nw_opt: " << w_opt
       << "\ntarget: " << rational_str(target) << "\nmean: " << fmt(est.mean)
       << "\nstderr: " << fmt(est.stderr_mean)
       << "\nachieved_ratio: " << fmt(achieved) << "\nrho: " << fmt(rr.rho)
       << "\ntight: "
       << (mean_ok && ratio_ok ? "within 4*stderr" : "VIOLATED") << "\n";
  r.text = text.str();
  r.detail = {{"family", "weighted-bipartite"},
              {"delta", delta},
              {"side", side},
              {"beta", std::to_string(num) + "/" + std::to_string(den)},
              {"trials", trials},
              {"w_opt", w_opt},
              {"target", rational_json(target)},
              {"mean", est.mean},
              {"stderr", est.stderr_mean},
              {"achieved_ratio", achieved},
              {"rho", rr.rho},
              {"tight", mean_ok && ratio_ok}};
  r.violation = !(mean_ok && ratio_ok);
  return r;
}

TightReport tight_weighted_knn(std::size_t n_side, Weight q,
                               std::size_t trials, std::uint64_t seed) {
  const WeightedGraph wg = gen_weighted_complete_bipartite(n_side, q);
  const std::size_t delta = n_side;
  // unchanged uniform-rank rule: expected weight (N + N*Q)/(delta+1)
  const Rational target = make_rational(
      mpz_class(static_cast<long>(n_side)) * (1 + q),
      mpz_class(static_cast<unsigned long>(delta + 1)));
  const Weight w_opt = static_cast<Weight>(n_side) * q;
  const double guaranteed = (static_cast<double>(delta) + 1.0) /
                            (1.0 + 1.0 / static_cast<double>(q));

  const auto est = monte_carlo("boppana", wg, trials, seed);
  const double target_d = to_double(target);
  const bool mean_ok = std::abs(est.mean - target_d) <= 4.0 * est.stderr_mean;
  const double achieved = static_cast<double>(w_opt) / est.mean;
  const double ratio_band =
      4.0 * est.stderr_mean * static_cast<double>(w_opt) / (est.mean * est.mean);
  const bool ratio_ok = std::abs(achieved - guaranteed) <= ratio_band;

  TightReport r;
  r.family = "weighted-knn";
  std::ostringstream text;
  text << "family: weighted-knn\nn_side: " << n_side << "\nq: " << q
       << "\ndelta: " << delta << "\ntrials: " << trials << "\nseed: " << seed
       << "\nw_opt: " << w_opt << "\ntarget: " << rational_str(target)
       << "\nmean: " << fmt(est.mean) << "\nstderr: " << fmt(est.stderr_mean)
       << "\nachieved_ratio: " << fmt(achieved)
       << "\nguaranteed_ratio: " << fmt(guaranteed) << "\ntight: "
       << (mean_ok && ratio_ok ? "within 4*stderr" : "VIOLATED") << "\n";
  r.text = text.str();
  r.detail = {{"family", "weighted-knn"},
              {"n_side", n_side},
              {"q", q},
              {"delta", delta},
              {"trials", trials},
              {"w_opt", w_opt},
              {"target", rational_json(target)},
              {"mean", est.mean},
              {"stderr", est.stderr_mean},
              {"achieved_ratio", achieved},
              {"guaranteed_ratio", guaranteed},
              {"tight", mean_ok && ratio_ok}};
  r.violation = !(mean_ok && ratio_ok);
  return r;
}

// ------------------------------------------------------------------ misc --

int cmd_sweep(std::size_t lo, std::size_t hi, double tol, const Output& out,
              std::uint64_t seed) {
  const auto rows = sweep_rho(lo, hi, tol);
  std::ostringstream csv;
  write_ratio_csv(csv, rows);

  json j = stamp("sweep-rho", seed);
  j["config"] = {{"delta_min", lo}, {"delta_max", hi}, {"tol", tol}};
  j["result"] = json::array();
  for (const auto& r : rows) {
    j["result"].push_back({{"delta", r.delta},
                           {"cw_ratio", r.cw_ratio},
                           {"turan_ratio", r.turan_ratio},
                           {"rho", r.rho},
                           {"argmin_x", r.argmin_x},
                           {"rho_over_delta_plus_1", r.rho_over_delta_plus_1}});
  }
  j["result_meta"] = {{"rho_asymptotic_over_delta_plus_1", std::cbrt(4.0) / 3.0}};
  out.emit(csv.str(), csv.str(), j);
  // reference asymptote for plotting; kept out of the CSV itself
  std::cerr << "# rho_over_delta_plus_1 asymptote: " << fmt(std::cbrt(4.0) / 3.0)
            << "\n";
  return kExitOk;
}

int cmd_stream(const std::string& graph_path, const std::string& weights_path,
               std::uint64_t seed, const std::string& evictions_path,
               const Output& out) {
  std::ifstream in(graph_path);
  if (!in) throw std::runtime_error("cannot open graph file " + graph_path);
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw std::runtime_error("edge stream: bad header, expected 'n m'");
  }

  std::optional<std::vector<Weight>> weights;
  if (!weights_path.empty()) {
    std::ifstream win(weights_path);
    if (!win) {
      throw std::runtime_error("cannot open weights file " + weights_path);
    }
    weights = read_weights(win, static_cast<std::size_t>(n));
  }
  const auto mode = weights ? RankAssignment::Mode::weighted
                            : RankAssignment::Mode::uniform;

  std::FILE* ev = nullptr;
  if (!evictions_path.empty()) {
    ev = std::fopen(evictions_path.c_str(), "w");
    if (!ev) {
      throw std::runtime_error("cannot open evictions file " + evictions_path);
    }
  }

  OnlineSession session(static_cast<std::size_t>(n), mode,
                        weights ? &*weights : nullptr, seed);
  long long u = 0, v = 0;
  while (in >> u >> v) {
    const auto report = session.add_edge(static_cast<Vertex>(u),
                                         static_cast<Vertex>(v));
    if (ev) {
      if (report.evicted) {
        std::fprintf(ev, "{\"edge\":[%lld,%lld],\"evicted\":%u}\n", u, v,
                     *report.evicted);
      } else {
        std::fprintf(ev, "{\"edge\":[%lld,%lld],\"evicted\":null}\n", u, v);
      }
    }
  }
  if (ev) std::fclose(ev);
  if (static_cast<long long>(session.edges_processed()) != m) {
    throw std::runtime_error("edge stream: header promised " +
                             std::to_string(m) + " edges, saw " +
                             std::to_string(session.edges_processed()));
  }

  const VertexSet final_set = session.current_set();
  Weight final_weight = static_cast<Weight>(final_set.size());
  if (weights) {
    final_weight = 0;
    for (Vertex x : final_set) final_weight += (*weights)[x];
  }

  std::ostringstream text;
  text << "source: file:" << graph_path << "\nmode: "
       << (weights ? "weighted" : "uniform") << "\nseed: " << seed
       << "\nn: " << n << "\nedges_processed: " << session.edges_processed()
       << "\nfinal_size: " << final_set.size() << "\nfinal_weight: "
       << final_weight << "\nstate_bytes: " << session.state_bytes() << "\n";

  json j = stamp("stream", seed);
  j["config"] = {{"source", "file:" + graph_path},
                 {"weights", weights_path},
                 {"evictions", evictions_path}};
  j["result"] = {{"n", n},
                 {"edges_processed", session.edges_processed()},
                 {"final_size", final_set.size()},
                 {"final_weight", final_weight},
                 {"state_bytes", session.state_bytes()}};

  std::ostringstream csv;
  csv << "n,edges_processed,final_size,final_weight,state_bytes\n"
      << n << ',' << session.edges_processed() << ',' << final_set.size()
      << ',' << final_weight << ',' << session.state_bytes() << "\n";
  out.emit(text.str(), csv.str(), j);
  return kExitOk;
}

int cmd_simulate(const Instance& inst, std::uint64_t seed,
                 unsigned quantize_bits, const Output& out) {
  SimulateOptions opts;
  opts.quantize_bits = quantize_bits;
  if (quantize_bits > 0) opts.budget_bits = quantize_bits + (inst.weighted() ? 64 : 0);
  const SimulationResult res =
      inst.weighted() ? simulate_one_round(inst.weighted_graph(), seed, opts)
                      : simulate_one_round(inst.graph, seed, opts);

  Weight weight = static_cast<Weight>(res.selected.size());
  if (inst.weighted()) {
    weight = 0;
    for (Vertex v : res.selected) weight += (*inst.weights)[v];
  }

  std::ostringstream text;
  text << "source: " << inst.source << "\nseed: " << seed
       << "\nn: " << inst.graph.n() << "\nm: " << inst.graph.m()
       << "\nselected_size: " << res.selected.size()
       << "\nselected_weight: " << weight
       << "\nmessages_sent: " << res.trace.messages_sent
       << "\nmax_message_bits: " << res.trace.max_message_bits
       << "\nmessage_budget_bits: " << res.trace.message_budget_bits << "\n";

  json j = stamp("simulate", seed);
  j["config"] = {{"source", inst.source}, {"quantize_bits", quantize_bits}};
  j["result"] = {{"n", inst.graph.n()},
                 {"m", inst.graph.m()},
                 {"selected_size", res.selected.size()},
                 {"selected_weight", weight},
                 {"messages_sent", res.trace.messages_sent},
                 {"max_message_bits", res.trace.max_message_bits},
                 {"message_budget_bits", res.trace.message_budget_bits}};

  std::ostringstream csv;
  csv << "n,m,selected_size,selected_weight,messages_sent,max_message_bits\n"
      << inst.graph.n() << ',' << inst.graph.m() << ',' << res.selected.size()
      << ',' << weight << ',' << res.trace.messages_sent << ','
      << res.trace.max_message_bits << "\n";
  out.emit(text.str(), csv.str(), j);
  return kExitOk;
}

int cmd_indist(std::size_t delta, std::size_t trials, std::uint64_t seed,
               const Output& out) {
  const IndistReport rep = indistinguishability_demo(delta, seed, trials);
  std::ostringstream text;
  text << "delta: " << rep.delta << "\ntrials: " << rep.trials << "\nclique: n="
       << rep.clique.n << " alpha=" << rep.clique.alpha
       << " mean=" << fmt(rep.clique.mean_solution)
       << " stderr=" << fmt(rep.clique.stderr_mean)
       << " inbox=" << rep.clique.inbox_entries_per_node << "\nbipartite: n="
       << rep.bipartite.n << " alpha=" << rep.bipartite.alpha
       << " mean=" << fmt(rep.bipartite.mean_solution)
       << " stderr=" << fmt(rep.bipartite.stderr_mean)
       << " inbox=" << rep.bipartite.inbox_entries_per_node
       << "\nbipartite_ratio: " << fmt(rep.bipartite_ratio)
       << "\ncw_ratio: " << fmt(cw_ratio(delta)) << "\n";

  json j = stamp("simulate", seed);
  j["config"] = {{"indist_delta", delta}, {"trials", trials}};
  j["result"] = {
      {"clique",
       {{"n", rep.clique.n},
        {"alpha", rep.clique.alpha},
        {"mean", rep.clique.mean_solution},
        {"stderr", rep.clique.stderr_mean},
        {"inbox_entries_per_node", rep.clique.inbox_entries_per_node}}},
      {"bipartite",
       {{"n", rep.bipartite.n},
        {"alpha", rep.bipartite.alpha},
        {"mean", rep.bipartite.mean_solution},
        {"stderr", rep.bipartite.stderr_mean},
        {"inbox_entries_per_node", rep.bipartite.inbox_entries_per_node}}},
      {"bipartite_ratio", rep.bipartite_ratio},
      {"cw_ratio", cw_ratio(delta)}};

  std::ostringstream csv;
  csv << "delta,trials,clique_mean,bipartite_mean,bipartite_alpha,bipartite_"
         "ratio\n"
      << rep.delta << ',' << rep.trials << ',' << fmt(rep.clique.mean_solution)
      << ',' << fmt(rep.bipartite.mean_solution) << ',' << rep.bipartite.alpha
      << ',' << fmt(rep.bipartite_ratio) << "\n";
  out.emit(text.str(), csv.str(), j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Turan-type independent set bounds, one-round algorithms and "
               "tight-instance experiments"};
  app.require_subcommand(1);

  std::string graph_path, weights_path, gen, alg = "boppana", family;
  std::string out_path, format = "text", evictions_path, beta_str;
  std::uint64_t seed = 1;
  std::size_t trials = 100000, oracle_limit = kDefaultOracleLimit;
  std::size_t delta = 3, side = 50, n_side = 3;
  Weight q = 9;
  std::size_t delta_min = 2, delta_max = 20;
  double tol = 1e-9;
  unsigned quantize_bits = 0;
  std::size_t indist_delta = 0;

  auto add_source = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path, "edge-list file (n m header)");
    cmd->add_option("--weights", weights_path, "weights file, one per vertex");
    cmd->add_option("--gen", gen, "generator spec, e.g. turan-tight:3");
  };
  auto add_output = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "write the report to this file");
    cmd->add_option("--format", format, "text | csv | json")
        ->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("--seed", seed, "rng seed (stamped into every report)");
  };

  CLI::App* bounds_cmd = app.add_subcommand("bounds", "compute all bounds");
  add_source(bounds_cmd);
  add_output(bounds_cmd);
  bounds_cmd->add_option("--oracle-limit", oracle_limit,
                         "max n for the exact oracle");

  CLI::App* run_cmd = app.add_subcommand("run", "run an algorithm");
  add_source(run_cmd);
  add_output(run_cmd);
  run_cmd->add_option("--alg", alg, "boppana|max|selkow|greedy-min|greedy-max|gwmin2");
  run_cmd->add_option("--trials", trials, "Monte Carlo trials");
  run_cmd->add_option("--oracle-limit", oracle_limit, "max n for the exact oracle");

  CLI::App* tight_cmd =
      app.add_subcommand("tight", "reproduce a tight-instance experiment");
  add_output(tight_cmd);
  tight_cmd->add_option("--family", family,
                        "turan | cw-regular-bipartite | weighted-bipartite | "
                        "weighted-knn")
      ->required();
  tight_cmd->add_option("--delta", delta, "max degree parameter");
  tight_cmd->add_option("--side", side, "side size for bipartite families");
  tight_cmd->add_option("--nside", n_side, "N for weighted-knn");
  tight_cmd->add_option("--q", q, "heavy weight for weighted-knn");
  tight_cmd->add_option("--beta", beta_str,
                        "NUM/DEN weight ratio for weighted-bipartite "
                        "(default: argmin of rho)");
  tight_cmd->add_option("--trials", trials, "Monte Carlo trials");
  tight_cmd->add_option("--oracle-limit", oracle_limit, "max n for the exact oracle");

  CLI::App* sweep_cmd =
      app.add_subcommand("sweep-rho", "tabulate rho(delta) as CSV");
  add_output(sweep_cmd);
  sweep_cmd->add_option("--delta-min", delta_min, "first delta");
  sweep_cmd->add_option("--delta-max", delta_max, "last delta");
  sweep_cmd->add_option("--tol", tol, "minimizer tolerance on x");

  CLI::App* stream_cmd =
      app.add_subcommand("stream", "single-pass run over an edge-list file");
  add_output(stream_cmd);
  stream_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  stream_cmd->add_option("--weights", weights_path, "weights file");
  stream_cmd->add_option("--evictions", evictions_path,
                         "write JSON-lines eviction reports here");

  CLI::App* sim_cmd =
      app.add_subcommand("simulate", "one broadcast round with accounting");
  add_source(sim_cmd);
  add_output(sim_cmd);
  sim_cmd->add_option("--quantize-bits", quantize_bits,
                      "quantize keys to this many bits (0 = full 64)");
  sim_cmd->add_option("--indist", indist_delta,
                      "run the clique vs regular-bipartite view demo for "
                      "this delta instead");
  sim_cmd->add_option("--trials", trials, "trials for --indist");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds_cmd->parsed()) {
      const Instance inst = resolve_instance(graph_path, weights_path, gen, seed);
      return cmd_bounds(inst, seed, oracle_limit,
                        Output{format, out_path});
    }
    if (run_cmd->parsed()) {
      const Instance inst = resolve_instance(graph_path, weights_path, gen, seed);
      return cmd_run(inst, alg, trials, seed, oracle_limit,
                     Output{format, out_path});
    }
    if (tight_cmd->parsed()) {
      TightReport rep;
      if (family == "turan") {
        rep = tight_turan(delta, seed, oracle_limit);
      } else if (family == "cw-regular-bipartite") {
        rep = tight_cw_regular_bipartite(delta, side, seed, oracle_limit);
      } else if (family == "weighted-bipartite") {
        std::optional<std::pair<Weight, Weight>> beta;
        if (!beta_str.empty()) {
          const auto slash = beta_str.find('/');
          if (slash == std::string::npos) {
            throw std::invalid_argument("--beta expects NUM/DEN");
          }
          beta = {std::stoll(beta_str.substr(0, slash)),
                  std::stoll(beta_str.substr(slash + 1))};
        }
        rep = tight_weighted_bipartite(delta, side, beta, trials, seed);
      } else if (family == "weighted-knn") {
        rep = tight_weighted_knn(n_side, q, trials, seed);
      } else {
        throw std::invalid_argument("unknown tight family '" + family + "'");
      }
      json j = stamp("tight", seed);
      j["config"] = {{"family", rep.family}, {"trials", trials}};
      j["result"] = rep.detail;
      std::ostringstream csv;
      csv << "family,violation\n" << rep.family << ',' << rep.violation << "\n";
      Output{format, out_path}.emit(rep.text, csv.str(), j);
      return rep.violation ? kExitViolation : kExitOk;
    }
    if (sweep_cmd->parsed()) {
      return cmd_sweep(delta_min, delta_max, tol, Output{format, out_path},
                       seed);
    }
    if (stream_cmd->parsed()) {
      return cmd_stream(graph_path, weights_path, seed, evictions_path,
                        Output{format, out_path});
    }
    if (sim_cmd->parsed()) {
      if (indist_delta > 0) {
        return cmd_indist(indist_delta, trials, seed, Output{format, out_path});
      }
      const Instance inst = resolve_instance(graph_path, weights_path, gen, seed);
      return cmd_simulate(inst, seed, quantize_bits, Output{format, out_path});
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitOk;
}
