#pragma once

#include <vector>

#include "dyncc/bcd.hpp"
#include "dyncc/closeness.hpp"
#include "dyncc/graph.hpp"
#include "dyncc/identical.hpp"

// Deliberately naive reference implementations. They share nothing with the
// optimized modules beyond the graph type and result containers, and are
// meant for tests, verification runs and small inputs.
namespace dyncc::oracle {

/// Plain queue BFS from every vertex, top-down only.
CentralityState oracle_closeness(const DynamicGraph& g);

/// Articulation vertices by deletion test; blocks by pairwise edge
/// equivalence. Cubic or worse, intended for n up to a few dozen.
BcdPartition oracle_bcd(const DynamicGraph& g);

/// Vertices whose removal increases the number of connected components.
std::vector<VertexId> oracle_articulation(const DynamicGraph& g);

/// Pairwise neighborhood comparison, no hashing.
std::vector<std::vector<VertexId>> oracle_identical(const DynamicGraph& g, IdentityKind kind);

}  // namespace dyncc::oracle
