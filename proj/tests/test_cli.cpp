// Drives the installed command line binary end to end through a shell.

#include <array>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "indset/generators.hpp"
#include "indset/io.hpp"
#include "indset/rng.hpp"

#ifndef INDSET_CLI_PATH
#error "INDSET_CLI_PATH must be defined"
#endif

namespace {

struct CommandResult {
  int exit_code = -1;
  std::string output;
};

CommandResult run_cli(const std::string& args) {
  const std::string cmd = std::string(INDSET_CLI_PATH) + " " + args + " 2>&1";
  std::array<char, 4096> buf{};
  CommandResult result;
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  while (std::fgets(buf.data(), buf.size(), pipe) != nullptr) {
    result.output += buf.data();
  }
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

std::string temp_path(const std::string& name) {
  return std::string("/tmp/indset_cli_test_") + name;
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("cli bounds on a generated instance") {
  const auto r = run_cli("bounds --gen turan-tight:3 --seed 5");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "turan_bound: 24/7"));
  CHECK(contains(r.output, "caro_wei: 9/2"));
  CHECK(contains(r.output, "alpha: 7"));
  CHECK(contains(r.output, "turan_ratio: 49/24"));
}

TEST_CASE("cli bounds on files, weighted") {
  const std::string gpath = temp_path("edge.txt");
  const std::string wpath = temp_path("edge.weights");
  {
    std::ofstream g(gpath);
    g << "2 1\n0 1\n";
    std::ofstream w(wpath);
    w << "3\n1\n";
  }
  const auto r = run_cli("bounds --graph " + gpath + " --weights " + wpath);
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "weighted_nbhd: 5/2"));
}

TEST_CASE("cli run: deterministic greedy value") {
  const auto r = run_cli("run --gen clique:5 --alg greedy-min --seed 1");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "value: 1"));
  CHECK(contains(r.output, "alpha: 1"));
}

TEST_CASE("cli run: one-round rule on the tight family") {
  const auto r = run_cli(
      "run --gen turan-tight:3 --alg boppana --trials 20000 --seed 11");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "expected: 4.5"));  // cw of the instance
  CHECK(contains(r.output, "alpha: 7"));
  CHECK(contains(r.output, "guaranteed_ratio: 2 (cw_ratio)"));
}

TEST_CASE("cli run: monte carlo fields present and sane") {
  const auto r = run_cli(
      "run --gen reg-bipartite:3,50 --alg boppana --trials 20000 --seed 7 "
      "--format json");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "\"mean\""));
  CHECK(contains(r.output, "\"guaranteed_ratio\": 2.0"));
  CHECK(contains(r.output, "\"alpha\": 50"));
  CHECK(contains(r.output, "\"version\": \"0.1.0\""));
}

TEST_CASE("cli tight families") {
  CHECK(run_cli("tight --family turan --delta 4").exit_code == 0);
  CHECK(run_cli("tight --family cw-regular-bipartite --delta 3 --side 12")
            .exit_code == 0);
  const auto knn =
      run_cli("tight --family weighted-knn --nside 3 --q 9 --trials 20000");
  CHECK(knn.exit_code == 0);
  CHECK(contains(knn.output, "target: 15/2"));
  const auto wb = run_cli(
      "tight --family weighted-bipartite --delta 3 --side 30 --trials 20000");
  CHECK(wb.exit_code == 0);
  CHECK(contains(wb.output, "beta: 669/1000"));
}

TEST_CASE("cli sweep-rho emits the canonical csv") {
  const std::string path = temp_path("sweep.csv");
  const auto r = run_cli("sweep-rho --delta-min 2 --delta-max 5 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "delta,cw_ratio,turan_ratio,rho,argmin_x,rho_over_delta_plus_1");
  int rows = 0;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty()) ++rows;
  }
  CHECK(rows == 4);
}

TEST_CASE("cli stream is order independent and reports evictions") {
  using namespace indset;
  const Graph g = gen_gnp(60, 0.15, 99);
  const std::string p1 = temp_path("stream1.txt");
  const std::string p2 = temp_path("stream2.txt");
  {
    std::ofstream out(p1);
    write_edge_list(out, g);
  }
  {
    // same graph, reversed edge order
    auto edges = g.edges();
    std::reverse(edges.begin(), edges.end());
    std::ofstream out(p2);
    out << g.n() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  }
  const std::string ev = temp_path("evictions.jsonl");
  const auto r1 = run_cli("stream --graph " + p1 + " --seed 5 --evictions " + ev);
  const auto r2 = run_cli("stream --graph " + p2 + " --seed 5");
  CHECK(r1.exit_code == 0);
  CHECK(r2.exit_code == 0);

  auto field = [](const std::string& out, const std::string& key) {
    const auto pos = out.find(key);
    REQUIRE(pos != std::string::npos);
    return out.substr(pos, out.find('\n', pos) - pos);
  };
  CHECK(field(r1.output, "final_size") == field(r2.output, "final_size"));

  std::ifstream evin(ev);
  std::string line;
  std::size_t lines = 0, evictions = 0;
  while (std::getline(evin, line)) {
    CHECK(contains(line, "{\"edge\":["));
    CHECK(contains(line, "\"evicted\":"));
    if (!contains(line, "null")) ++evictions;
    ++lines;
  }
  CHECK(lines == g.m());
  CHECK(evictions > 0);
}

TEST_CASE("cli stream single pass over a large sparse instance") {
  using namespace indset;
  const std::size_t n = 100000;
  const Graph g = gen_gnp(n, 2e-4, 31);
  REQUIRE(g.m() > 500000);
  const std::string path = temp_path("big.txt");
  {
    std::ofstream out(path);
    write_edge_list(out, g);
  }
  const auto r = run_cli("stream --graph " + path + " --seed 1 --format json");
  CHECK(r.exit_code == 0);
  // state is keys + alive bits, independent of m
  const std::string expect =
      "\"state_bytes\": " + std::to_string(n * 8 + (n + 7) / 8);
  CHECK(contains(r.output, expect));
  std::remove(path.c_str());
}

TEST_CASE("cli simulate") {
  const auto r = run_cli("simulate --gen clique:4 --seed 3");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "selected_size: 1"));
  CHECK(contains(r.output, "messages_sent: 12"));
  CHECK(contains(r.output, "max_message_bits: 64"));

  const auto q = run_cli("simulate --gen gnp:50,0.2 --seed 3 --quantize-bits 16");
  CHECK(q.exit_code == 0);
  CHECK(contains(q.output, "max_message_bits: 16"));

  const auto ind = run_cli("simulate --indist 3 --trials 2000 --seed 9");
  CHECK(ind.exit_code == 0);
  CHECK(contains(ind.output, "bipartite_ratio:"));
  CHECK(contains(ind.output, "clique: n=4 alpha=1 mean=1"));
}

TEST_CASE("cli reports are reproducible bit-exactly") {
  const std::string args =
      "run --gen gnp:40,0.2 --alg max --trials 5000 --seed 42 --format json";
  const auto r1 = run_cli(args);
  const auto r2 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
}

TEST_CASE("cli run reports missing alpha above the oracle limit") {
  const auto r = run_cli("run --gen gnp:50,0.1 --alg boppana --trials 2000");
  CHECK(r.exit_code == 0);
  CHECK(contains(r.output, "alpha: unavailable"));
  const auto forced =
      run_cli("run --gen gnp:50,0.1 --alg boppana --trials 2000 "
              "--oracle-limit 64");
  CHECK(forced.exit_code == 0);
  CHECK(contains(forced.output, "(oracle)"));
}

TEST_CASE("cli input errors exit with code 1") {
  CHECK(run_cli("bounds --graph /nonexistent/file").exit_code == 1);
  CHECK(run_cli("bounds --gen bogus:1").exit_code == 1);
  CHECK(run_cli("run --gen clique:4 --alg bogus").exit_code == 1);
  CHECK(run_cli("bounds --gen clique:3 --graph /tmp/x").exit_code == 1);
  CHECK(run_cli("tight --family bogus").exit_code == 1);

  const std::string bad = temp_path("bad.txt");
  {
    std::ofstream out(bad);
    out << "2 1\n0 0\n";  // self-loop
  }
  CHECK(run_cli("stream --graph " + bad).exit_code == 1);
}
