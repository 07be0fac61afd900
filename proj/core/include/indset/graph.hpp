#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "indset/rational.hpp"
#include "indset/types.hpp"
#include "indset/vertex_set.hpp"

namespace indset {

/// Immutable simple undirected graph with sorted adjacency lists.
/// Vertex ids are dense, 0-based. Safe to share across threads once built.
class Graph {
 public:
  Graph() = default;

  /// Validates and builds: endpoints must be < n, self-loops and duplicate
  /// edges are rejected with an error naming the offending edge.
  static Graph build(std::size_t n, const std::vector<Edge>& edges);

  std::size_t n() const { return adj_.size(); }
  std::size_t m() const { return m_; }
  std::size_t degree(Vertex v) const { return adj_[v].size(); }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  std::size_t max_degree() const { return max_degree_; }

  /// Average degree 2m/n, exact. Zero for the empty-vertex graph.
  Rational avg_degree_exact() const;
  double avg_degree() const { return to_double(avg_degree_exact()); }

  /// Canonical edge list: u < v, sorted lexicographically.
  std::vector<Edge> edges() const;

  bool operator==(const Graph&) const = default;

 private:
  std::size_t m_ = 0;
  std::size_t max_degree_ = 0;
  std::vector<std::vector<Vertex>> adj_;
};

/// Graph plus positive integral per-vertex weights.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  static WeightedGraph build(Graph graph, std::vector<Weight> weights);

  /// Unit weights, so every weighted formula degenerates to its
  /// cardinality counterpart.
  static WeightedGraph uniform(Graph graph);

  const Graph& graph() const { return graph_; }
  Weight weight(Vertex v) const { return weights_[v]; }
  const std::vector<Weight>& weights() const { return weights_; }
  Weight total_weight() const { return total_; }
  /// w(N[v]): weight of the closed neighborhood of v.
  Weight closed_nbhd_weight(Vertex v) const;
  Weight set_weight(const VertexSet& s) const;

 private:
  Graph graph_;
  std::vector<Weight> weights_;
  Weight total_ = 0;
};

/// True iff no edge of g has both endpoints in s.
bool is_independent(const Graph& g, const VertexSet& s);

/// Degree statistics; with an optional independent set, also the per-degree
/// counts of its members and the number of edges incident to it.
struct DegreeProfile {
  std::size_t max_degree = 0;
  Rational avg_degree;
  std::vector<std::size_t> histogram;  // histogram[d] = #vertices of degree d
  std::optional<std::vector<std::size_t>> opt_histogram;
  std::optional<std::size_t> opt_incident_edges;  // sum of i * opt_histogram[i]
};

DegreeProfile degree_profile(const Graph& g, const VertexSet* opt = nullptr);

}  // namespace indset
