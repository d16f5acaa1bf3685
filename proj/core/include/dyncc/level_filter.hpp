#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "dyncc/graph.hpp"
#include "dyncc/sssp.hpp"
#include "dyncc/types.hpp"

namespace dyncc {

/// Relation between a source's distances to the two endpoints of a changed
/// edge, measured on the graph that does not contain the edge.
enum class LevelCase : std::uint8_t {
  EqualLevels,         // d(s,u) == d(s,v)
  AdjacentLevels,      // |d(s,u) - d(s,v)| == 1
  FarLevels,           // |d(s,u) - d(s,v)| > 1
  OneSideUnreachable,  // exactly one endpoint reachable
  BothUnreachable,
};

inline constexpr std::size_t kLevelCaseCount = 5;
using LevelCaseCounts = std::array<std::uint64_t, kLevelCaseCount>;

constexpr LevelCase classify_source(Distance du, Distance dv) {
  if (du == kUnreachable && dv == kUnreachable) return LevelCase::BothUnreachable;
  if (du == kUnreachable || dv == kUnreachable) return LevelCase::OneSideUnreachable;
  const Distance gap = du > dv ? du - dv : dv - du;
  if (gap == 0) return LevelCase::EqualLevels;
  if (gap == 1) return LevelCase::AdjacentLevels;
  return LevelCase::FarLevels;
}

/// Whether a source in this case can see its farness change.
constexpr bool requires_update(LevelCase c) {
  return c == LevelCase::FarLevels || c == LevelCase::OneSideUnreachable;
}

std::string_view to_string(LevelCase c);

/// Case label of every vertex for the edge uv. `g` must not contain uv: pass
/// the graph before an insertion, or after a deletion.
std::vector<LevelCase> classify_all(const DynamicGraph& g, VertexId u, VertexId v,
                                    const SsspOptions& options = {});

/// Members of `scope` whose closeness may change when uv is toggled.
std::vector<VertexId> filter_sources(const DynamicGraph& g, VertexId u, VertexId v,
                                     std::span<const VertexId> scope,
                                     const SsspOptions& options = {});

LevelCaseCounts case_distribution(const DynamicGraph& g, VertexId u, VertexId v,
                                  const SsspOptions& options = {});

}  // namespace dyncc
