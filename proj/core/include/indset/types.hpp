#pragma once

#include <cstdint>
#include <utility>

namespace indset {

using Vertex = std::uint32_t;
using Weight = std::int64_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr const char* kProjectVersion = "0.1.0";

}  // namespace indset
