#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "dyncc/types.hpp"

namespace dyncc {

/// Mutable simple undirected graph. Adjacency lists are kept sorted by
/// neighbor id; vertex ids are dense and only ever grow.
class DynamicGraph {
 public:
  DynamicGraph() = default;
  explicit DynamicGraph(std::size_t vertex_count) : adjacency_(vertex_count) {}

  /// Builds from an edge list. Throws on self-loops, duplicates and ids >= n.
  static DynamicGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return adjacency_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }
  std::size_t degree(VertexId v) const { return adjacency_[v].size(); }
  std::span<const VertexId> neighbors(VertexId v) const { return adjacency_[v]; }

  bool has_edge(VertexId u, VertexId v) const;

  /// Inserts uv. An endpoint equal to vertex_count() appends a new vertex;
  /// when both endpoints are new they must be n and n+1.
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);

  VertexId add_vertex();

  /// Grows the id range to at least `vertex_count` isolated vertices.
  void ensure_vertices(std::size_t vertex_count);

  std::vector<Edge> edges() const;

  /// Throws VertexRangeError / SelfLoopError / DuplicateEdgeError exactly as
  /// add_edge would, without mutating.
  void check_insertable(VertexId u, VertexId v) const;

  friend bool operator==(const DynamicGraph&, const DynamicGraph&) = default;

 private:
  std::vector<std::vector<VertexId>> adjacency_;
  std::size_t edge_count_ = 0;
};

/// Immutable compressed-row snapshot. Used for per-update subgraphs and for
/// read-only sharing between concurrent traversals.
class CsrGraph {
 public:
  CsrGraph() = default;

  static CsrGraph from_graph(const DynamicGraph& g);
  /// Edges must be simple and reference ids < vertex_count.
  static CsrGraph from_edges(std::size_t vertex_count, std::span<const Edge> edges);

  std::size_t vertex_count() const noexcept { return offsets_.empty() ? 0 : offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return targets_.size() / 2; }
  std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }
  std::span<const VertexId> neighbors(VertexId v) const {
    return {targets_.data() + offsets_[v], targets_.data() + offsets_[v + 1]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> targets_;
};

struct ComponentLabels {
  std::vector<VertexId> label;  // component index per vertex
  std::size_t count = 0;
};

ComponentLabels connected_components(const DynamicGraph& g);

/// True iff removing uv disconnects u from v. Throws MissingEdgeError.
bool is_bridge(const DynamicGraph& g, VertexId u, VertexId v);

}  // namespace dyncc
