#include "dyncc/level_filter.hpp"

#include <stdexcept>

#include "dyncc/errors.hpp"

namespace dyncc {

std::string_view to_string(LevelCase c) {
  switch (c) {
    case LevelCase::EqualLevels:
      return "equal_levels";
    case LevelCase::AdjacentLevels:
      return "adjacent_levels";
    case LevelCase::FarLevels:
      return "far_levels";
    case LevelCase::OneSideUnreachable:
      return "one_side_unreachable";
    case LevelCase::BothUnreachable:
      return "both_unreachable";
  }
  return "?";
}

std::vector<LevelCase> classify_all(const DynamicGraph& g, VertexId u, VertexId v,
                                    const SsspOptions& options) {
  const std::size_t n = g.vertex_count();
  if (u >= n) throw VertexRangeError(u, n);
  if (v >= n) throw VertexRangeError(v, n);
  if (g.has_edge(u, v)) {
    throw std::invalid_argument("level distances must be measured on a graph without the edge");
  }
  BfsWorkspace ws;
  breadth_first(g, u, options, ws);
  const DistanceArray du = ws.take_distances();
  breadth_first(g, v, options, ws);
  const auto dv = ws.distances();

  std::vector<LevelCase> cases(n);
  for (std::size_t s = 0; s < n; ++s) cases[s] = classify_source(du[s], dv[s]);
  return cases;
}

std::vector<VertexId> filter_sources(const DynamicGraph& g, VertexId u, VertexId v,
                                     std::span<const VertexId> scope, const SsspOptions& options) {
  const auto cases = classify_all(g, u, v, options);
  std::vector<VertexId> out;
  for (VertexId s : scope) {
    if (requires_update(cases.at(s))) out.push_back(s);
  }
  return out;
}

LevelCaseCounts case_distribution(const DynamicGraph& g, VertexId u, VertexId v,
                                  const SsspOptions& options) {
  LevelCaseCounts counts{};
  for (LevelCase c : classify_all(g, u, v, options)) ++counts[static_cast<std::size_t>(c)];
  return counts;
}

}  // namespace dyncc
