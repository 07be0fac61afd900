#include "indset/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

namespace indset {

Graph read_edge_list(std::istream& in) {
  long long n = 0, m = 0;
  if (!(in >> n >> m) || n < 0 || m < 0) {
    throw std::runtime_error("edge list: bad header, expected 'n m'");
  }
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw std::runtime_error("edge list: expected " + std::to_string(m) +
                               " edges, got " + std::to_string(i));
    }
    if (u < 0 || v < 0) {
      throw std::runtime_error("edge list: negative vertex id on edge " +
                               std::to_string(i));
    }
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  return Graph::build(static_cast<std::size_t>(n), edges);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

std::vector<Weight> read_weights(std::istream& in, std::size_t n) {
  std::vector<Weight> weights;
  weights.reserve(n);
  long long w = 0;
  while (weights.size() < n && (in >> w)) {
    if (w < 1) {
      throw std::runtime_error("weights: line " +
                               std::to_string(weights.size()) +
                               ": weight must be a positive integer");
    }
    weights.push_back(w);
  }
  if (weights.size() < n) {
    throw std::runtime_error("weights: expected " + std::to_string(n) +
                             " entries, got " + std::to_string(weights.size()));
  }
  return weights;
}

void write_weights(std::ostream& out, const std::vector<Weight>& weights) {
  for (Weight w : weights) out << w << '\n';
}

}  // namespace indset
