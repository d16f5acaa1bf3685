#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dyncc/graph.hpp"
#include "dyncc/sssp.hpp"
#include "dyncc/types.hpp"

namespace dyncc {

inline double closeness_from_farness(std::uint64_t far) {
  return far == 0 ? 0.0 : 1.0 / static_cast<double>(far);
}

/// Integer farness per vertex. Closeness is derived from it on demand, so
/// incremental and from-scratch results can be compared exactly.
struct CentralityState {
  std::vector<std::uint64_t> far;

  std::size_t size() const noexcept { return far.size(); }
  double closeness(VertexId v) const { return closeness_from_farness(far[v]); }
  std::vector<double> closeness_values() const;

  friend bool operator==(const CentralityState&, const CentralityState&) = default;
};

struct VertexCentrality {
  std::uint64_t far = 0;
  double closeness = 0.0;
};

/// Sum of the finite entries.
std::uint64_t farness_from_distances(std::span<const Distance> dist);

/// One traversal per vertex. Sources are split across `threads` workers over
/// the same read-only graph; the result does not depend on the split.
CentralityState closeness_all(const DynamicGraph& g, const SsspOptions& options = {},
                              unsigned threads = 1);

VertexCentrality closeness_single(const DynamicGraph& g, VertexId s,
                                  const SsspOptions& options = {});

}  // namespace dyncc
