#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <vector>

namespace dyncc {

using VertexId = std::uint32_t;
using Distance = std::uint32_t;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();
inline constexpr VertexId kNoVertex = std::numeric_limits<VertexId>::max();

using DistanceArray = std::vector<Distance>;

// Undirected edge; normalized form keeps u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  constexpr Edge normalized() const { return u < v ? Edge{u, v} : Edge{v, u}; }
  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

constexpr std::uint64_t edge_key(VertexId a, VertexId b) {
  if (a > b) {
    const VertexId t = a;
    a = b;
    b = t;
  }
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

}  // namespace dyncc
