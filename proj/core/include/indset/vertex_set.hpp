#pragma once

#include <cstddef>
#include <vector>

#include "indset/types.hpp"

namespace indset {

/// A subset of the vertices 0..n-1 of some graph. Members are kept sorted;
/// construction rejects out-of-range ids and duplicates.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::size_t universe, std::vector<Vertex> members);

  static VertexSet from_flags(const std::vector<bool>& flags);

  std::size_t universe() const { return universe_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(Vertex v) const;
  const std::vector<Vertex>& members() const { return members_; }

  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }

  bool operator==(const VertexSet&) const = default;

 private:
  std::size_t universe_ = 0;
  std::vector<Vertex> members_;
};

}  // namespace indset
