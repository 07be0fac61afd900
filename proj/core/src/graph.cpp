#include "indset/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indset {

namespace {

std::string edge_str(Vertex u, Vertex v) {
  return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
}

}  // namespace

Graph Graph::build(std::size_t n, const std::vector<Edge>& edges) {
  Graph g;
  g.adj_.assign(n, {});

  std::vector<Edge> normalized;
  normalized.reserve(edges.size());
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw std::invalid_argument("edge " + edge_str(u, v) +
                                  ": vertex id out of range (n=" +
                                  std::to_string(n) + ")");
    }
    if (u == v) {
      throw std::invalid_argument("edge " + edge_str(u, v) + ": self-loop");
    }
    normalized.emplace_back(std::min(u, v), std::max(u, v));
  }
  std::sort(normalized.begin(), normalized.end());
  for (std::size_t i = 1; i < normalized.size(); ++i) {
    if (normalized[i] == normalized[i - 1]) {
      throw std::invalid_argument(
          "edge " + edge_str(normalized[i].first, normalized[i].second) +
          ": duplicate");
    }
  }

  for (const auto& [u, v] : normalized) {
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  for (auto& nbrs : g.adj_) {
    std::sort(nbrs.begin(), nbrs.end());
    g.max_degree_ = std::max(g.max_degree_, nbrs.size());
  }
  g.m_ = normalized.size();
  return g;
}

Rational Graph::avg_degree_exact() const {
  if (n() == 0) return Rational(0);
  return make_rational(mpz_class(2) * static_cast<unsigned long>(m_),
                       mpz_class(static_cast<unsigned long>(n())));
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n(); ++u) {
    for (Vertex v : adj_[u]) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

WeightedGraph WeightedGraph::build(Graph graph, std::vector<Weight> weights) {
  if (weights.size() != graph.n()) {
    throw std::invalid_argument("weights: expected " +
                                std::to_string(graph.n()) + " entries, got " +
                                std::to_string(weights.size()));
  }
  WeightedGraph wg;
  for (std::size_t v = 0; v < weights.size(); ++v) {
    if (weights[v] < 1) {
      throw std::invalid_argument("weights: vertex " + std::to_string(v) +
                                  " has non-positive weight " +
                                  std::to_string(weights[v]));
    }
    wg.total_ += weights[v];
  }
  wg.graph_ = std::move(graph);
  wg.weights_ = std::move(weights);
  return wg;
}

WeightedGraph WeightedGraph::uniform(Graph graph) {
  std::vector<Weight> unit(graph.n(), 1);
  return build(std::move(graph), std::move(unit));
}

Weight WeightedGraph::closed_nbhd_weight(Vertex v) const {
  Weight total = weights_[v];
  for (Vertex u : graph_.neighbors(v)) total += weights_[u];
  return total;
}

Weight WeightedGraph::set_weight(const VertexSet& s) const {
  Weight total = 0;
  for (Vertex v : s) total += weights_[v];
  return total;
}

bool is_independent(const Graph& g, const VertexSet& s) {
  if (s.universe() != g.n()) {
    throw std::invalid_argument("vertex set universe does not match graph");
  }
  std::vector<bool> in_set(g.n(), false);
  for (Vertex v : s) in_set[v] = true;
  for (Vertex v : s) {
    for (Vertex u : g.neighbors(v)) {
      if (in_set[u]) return false;
    }
  }
  return true;
}

DegreeProfile degree_profile(const Graph& g, const VertexSet* opt) {
  DegreeProfile p;
  p.max_degree = g.max_degree();
  p.avg_degree = g.avg_degree_exact();
  p.histogram.assign(g.max_degree() + 1, 0);
  for (Vertex v = 0; v < g.n(); ++v) p.histogram[g.degree(v)]++;

  if (opt != nullptr) {
    if (!is_independent(g, *opt)) {
      throw std::invalid_argument("degree_profile: opt is not independent");
    }
    std::vector<std::size_t> oh(g.max_degree() + 1, 0);
    std::size_t incident = 0;
    for (Vertex v : *opt) {
      oh[g.degree(v)]++;
      incident += g.degree(v);  // opt independent: each edge counted once
    }
    p.opt_histogram = std::move(oh);
    p.opt_incident_edges = incident;
  }
  return p;
}

}  // namespace indset
