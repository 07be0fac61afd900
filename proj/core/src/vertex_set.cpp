#include "indset/vertex_set.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace indset {

VertexSet::VertexSet(std::size_t universe, std::vector<Vertex> members)
    : universe_(universe), members_(std::move(members)) {
  std::sort(members_.begin(), members_.end());
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (members_[i] >= universe_) {
      throw std::invalid_argument("vertex set: id " +
                                  std::to_string(members_[i]) +
                                  " out of range (universe " +
                                  std::to_string(universe_) + ")");
    }
    if (i > 0 && members_[i] == members_[i - 1]) {
      throw std::invalid_argument("vertex set: duplicate id " +
                                  std::to_string(members_[i]));
    }
  }
}

VertexSet VertexSet::from_flags(const std::vector<bool>& flags) {
  VertexSet s;
  s.universe_ = flags.size();
  for (std::size_t v = 0; v < flags.size(); ++v) {
    if (flags[v]) s.members_.push_back(static_cast<Vertex>(v));
  }
  return s;
}

bool VertexSet::contains(Vertex v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

}  // namespace indset
