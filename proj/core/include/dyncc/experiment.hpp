#pragma once

#include <cstdint>
#include <vector>

#include "dyncc/engine.hpp"
#include "dyncc/graph.hpp"

namespace dyncc {

struct RandomExperiment {
  DynamicGraph base;                  // input minus the sampled edges
  std::vector<EdgeEvent> insertions;  // the sampled edges, in removal order
};

/// Random insertion workload: repeatedly pick a vertex uniformly and one of
/// its neighbors uniformly, discard the pair if it is a bridge, otherwise
/// remove it. Connectivity of `g` is preserved. Throws
/// InsufficientNonBridgeEdgesError when the graph runs out of non-bridges.
RandomExperiment prepare_random_experiment(const DynamicGraph& g, std::size_t k,
                                           std::uint64_t seed);

}  // namespace dyncc
