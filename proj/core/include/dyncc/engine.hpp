#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dyncc/bcd.hpp"
#include "dyncc/closeness.hpp"
#include "dyncc/graph.hpp"
#include "dyncc/identical.hpp"
#include "dyncc/level_filter.hpp"

namespace dyncc {

enum class EventOp : std::uint8_t { Insert, Delete };

struct EdgeEvent {
  EventOp op = EventOp::Insert;
  VertexId u = 0;
  VertexId v = 0;
  std::optional<std::int64_t> timestamp;

  friend bool operator==(const EdgeEvent&, const EdgeEvent&) = default;
};

/// Which work filters an update uses. The named configurations are prefixes:
/// cc (none), b, bl, bli, blih. "l" (levels without decomposition) is
/// available for ablation.
struct EngineConfig {
  bool use_bcd = true;
  bool use_levels = true;
  bool use_identical = true;
  bool use_hybrid = true;
  double alpha = 1.0;
  unsigned threads = 1;

  /// Throws std::invalid_argument for unknown names.
  static EngineConfig named(std::string_view name);
  std::string name() const;
  SsspOptions sssp() const { return {use_hybrid ? SsspMode::Hybrid : SsspMode::TopDown, alpha}; }
};

struct UpdateReport {
  EventOp op = EventOp::Insert;
  VertexId u = 0;
  VertexId v = 0;
  std::size_t sources_total = 0;  // size of the update scope
  std::size_t sources_skipped_level = 0;
  std::size_t sources_skipped_identical = 0;
  std::size_t sssp_count = 0;
  std::size_t fix_count = 0;
  bool partition_rebuilt = false;
  LevelCaseCounts level_cases{};  // over the scope; zero when no filter pass ran
  double filter_seconds = 0.0;
  double update_seconds = 0.0;
};

/// Keeps exact farness of every vertex while edges are inserted and deleted.
/// Each update confines its traversals to the biconnected component holding
/// the edge, drops sources whose distances to the endpoints differ by at most
/// one, runs one traversal per identical-vertex class, and repairs vertices
/// outside the component from their representative's change.
class Engine {
 public:
  explicit Engine(DynamicGraph graph, EngineConfig config = {});

  const DynamicGraph& graph() const noexcept { return graph_; }
  const CentralityState& centrality() const noexcept { return state_; }
  const EngineConfig& config() const noexcept { return config_; }
  /// Only maintained when use_bcd is set.
  const BcdPartition& partition() const noexcept { return partition_; }
  /// Only maintained when use_identical is set.
  const IdenticalClasses& classes(IdentityKind kind) const noexcept {
    return kind == IdentityKind::TypeI ? type1_ : type2_;
  }

  /// Throws SelfLoopError, DuplicateEdgeError or VertexRangeError before
  /// touching any state.
  UpdateReport insert_edge(VertexId u, VertexId v);
  /// Throws MissingEdgeError before touching any state.
  UpdateReport delete_edge(VertexId u, VertexId v);
  UpdateReport apply(const EdgeEvent& event);

  using Observer = std::function<void(std::size_t index, const UpdateReport& report)>;
  /// Applies events in order. A failing event raises StreamError carrying its
  /// index; earlier events stay applied.
  std::vector<UpdateReport> process_stream(std::span<const EdgeEvent> events,
                                           const Observer& observer = {});

 private:
  UpdateReport update(EventOp op, VertexId u, VertexId v);

  DynamicGraph graph_;
  EngineConfig config_;
  CentralityState state_;
  BcdPartition partition_;
  IdenticalClasses type1_;
  IdenticalClasses type2_;
  std::vector<VertexId> local_of_;  // global -> scope-local id, kNoVertex outside
};

}  // namespace dyncc
