#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <unordered_map>
#include <vector>

#include "dyncc/graph.hpp"
#include "dyncc/types.hpp"

namespace dyncc {

/// TypeI: equal open neighborhoods. TypeII: equal closed neighborhoods.
enum class IdentityKind : std::uint8_t { TypeI, TypeII };

using ClassId = std::uint32_t;

/// Equivalence classes of identical vertices. Members of a class have equal
/// distances to every third vertex and therefore equal farness.
class IdenticalClasses {
 public:
  IdenticalClasses() = default;

  IdentityKind kind() const noexcept { return kind_; }
  std::size_t vertex_count() const noexcept { return class_of_.size(); }
  ClassId class_of(VertexId v) const { return class_of_[v]; }
  /// Members in no particular order.
  std::span<const VertexId> members(ClassId c) const { return members_[c]; }
  std::size_t class_count() const noexcept { return members_.size() - free_.size(); }

  /// Sorted member lists, sorted; independent of class numbering.
  std::vector<std::vector<VertexId>> canonical() const;

  friend IdenticalClasses build_classes(const DynamicGraph& g, IdentityKind kind);
  friend void maintain_on_edge_change(IdenticalClasses& classes, const DynamicGraph& g_after,
                                      VertexId u, VertexId v);

 private:
  std::uint64_t hash_of(const DynamicGraph& g, VertexId x) const;
  bool same_neighborhood(const DynamicGraph& g, VertexId a, VertexId b) const;
  ClassId open_class(std::uint64_t hash);
  void join(VertexId x, ClassId c);
  void detach(VertexId x);
  void place(const DynamicGraph& g, VertexId x);

  static constexpr ClassId kDetached = ~ClassId{0};

  IdentityKind kind_ = IdentityKind::TypeI;
  std::vector<ClassId> class_of_;
  std::vector<std::uint32_t> position_;  // index of each vertex inside its member list
  std::vector<std::vector<VertexId>> members_;
  std::vector<std::uint64_t> class_hash_;
  std::vector<ClassId> free_;
  std::unordered_map<std::uint64_t, std::vector<ClassId>> buckets_;
};

/// Hash each neighborhood (sum of neighbor ids, plus the vertex itself for
/// TypeII), sort by hash, then split equal-hash runs by exact comparison.
IdenticalClasses build_classes(const DynamicGraph& g, IdentityKind kind);

/// Re-places u and v after the edge uv was inserted into or deleted from
/// `g_after`. Only the neighborhoods of u and v change, so nothing else moves.
void maintain_on_edge_change(IdenticalClasses& classes, const DynamicGraph& g_after, VertexId u,
                             VertexId v);

/// Smallest-id member of each class that intersects `scope`, restricted to
/// members inside `scope`.
std::map<ClassId, VertexId> class_representatives(const IdenticalClasses& classes,
                                                  std::span<const VertexId> scope);

}  // namespace dyncc
