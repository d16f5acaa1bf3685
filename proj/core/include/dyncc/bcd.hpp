#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dyncc/graph.hpp"
#include "dyncc/types.hpp"

namespace dyncc {

using ComponentId = std::uint32_t;

/// Partition of the edge set into biconnected components. Ids are only
/// meaningful within one version of the partition; a rebuild renumbers them.
class BcdPartition {
 public:
  BcdPartition() = default;

  /// Assembles a partition from explicit edge blocks, block i getting id i.
  static BcdPartition from_blocks(std::size_t vertex_count, std::vector<std::vector<Edge>> blocks);

  std::size_t vertex_count() const noexcept { return touch_.size(); }
  std::size_t component_count() const noexcept { return edges_.size(); }

  std::optional<ComponentId> find_component(VertexId u, VertexId v) const;
  /// Throws MissingEdgeError when uv is not partitioned.
  ComponentId component_of(VertexId u, VertexId v) const;

  std::span<const VertexId> component_vertices(ComponentId c) const { return vertices_[c]; }
  std::span<const Edge> component_edges(ComponentId c) const { return edges_[c]; }

  /// A vertex is an articulation vertex iff it touches edges of at least two
  /// components.
  bool is_articulation(VertexId v) const { return v < touch_.size() && touch_[v] >= 2; }
  std::vector<VertexId> articulation_vertices() const;
  std::vector<VertexId> articulation_vertices_of(ComponentId c) const;

  /// Blocks as sorted edge lists, sorted; equal for equal partitions regardless
  /// of id assignment.
  std::vector<std::vector<Edge>> canonical_blocks() const;

  friend struct BcdMaintenance;

 private:
  void add_block(std::vector<Edge> edges);

  std::unordered_map<std::uint64_t, ComponentId> edge_component_;
  std::vector<std::vector<Edge>> edges_;
  std::vector<std::vector<VertexId>> vertices_;
  std::vector<std::uint32_t> touch_;  // components incident to each vertex
};

/// Hopcroft-Tarjan decomposition, linear time, iterative.
BcdPartition decompose(const DynamicGraph& g);

struct InsertOutcome {
  ComponentId cid = 0;  // component holding the new edge
  bool rebuilt = false;
};

/// `g_after` already contains uv. If u and v shared a component before the
/// insertion the edge joins it; otherwise the partition is rebuilt.
InsertOutcome maintain_on_insert(const DynamicGraph& g_after, BcdPartition& pi, VertexId u,
                                 VertexId v);

/// `g_after` no longer contains uv; `pi` still does. Rebuilds `pi` and returns
/// the id uv had before the rebuild. Throws MissingEdgeError.
ComponentId maintain_on_delete(const DynamicGraph& g_after, BcdPartition& pi, VertexId u,
                               VertexId v);

/// The subgraph an update is confined to: V_cid, E_cid and the members of
/// V_cid that also belong to other components.
struct ComponentScope {
  std::vector<VertexId> vertices;  // sorted
  std::vector<Edge> edges;
  std::vector<VertexId> articulation;  // sorted
};

ComponentScope scope_of(const BcdPartition& pi, ComponentId cid);

/// Scope for deleting uv: the component that held uv, minus uv itself.
/// `pi` is the partition from before the deletion.
ComponentScope deletion_scope(const BcdPartition& pi, VertexId u, VertexId v);

/// rep/R/RF for a scope. rep[x] is the scope vertex through which x reaches
/// the scope (kNoVertex when it cannot), rep_distance[x] = d(x, rep[x]).
/// R[a] counts vertices represented by a including a; RF[a] sums their
/// distances to a. Both are zero outside the scope.
struct RepInfo {
  std::vector<VertexId> rep;
  std::vector<Distance> rep_distance;
  std::vector<std::uint64_t> represented_count;
  std::vector<std::uint64_t> represented_farness;
};

RepInfo build_representatives(const DynamicGraph& g_after, const ComponentScope& scope);
RepInfo build_representatives(const DynamicGraph& g_after, const BcdPartition& pi_after,
                              ComponentId cid);

}  // namespace dyncc
