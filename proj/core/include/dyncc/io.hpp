#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "dyncc/closeness.hpp"
#include "dyncc/engine.hpp"
#include "dyncc/graph.hpp"

namespace dyncc {

/// Maps sparse external ids onto dense ids in order of first appearance.
class IdMapper {
 public:
  VertexId map(std::uint64_t external);
  std::optional<VertexId> find(std::uint64_t external) const;
  std::span<const std::uint64_t> originals() const { return originals_; }
  /// "dense,original" per line, with a header.
  void write(std::ostream& out) const;

 private:
  std::unordered_map<std::uint64_t, VertexId> dense_;
  std::vector<std::uint64_t> originals_;
};

struct EdgeListParse {
  DynamicGraph graph;
  std::size_t duplicate_lines = 0;  // repeated or reversed edges, dropped
  std::size_t self_loop_lines = 0;  // dropped
};

/// "u v" per line, extra columns ignored; lines starting with '#' or '%' and
/// blank lines are skipped. Without a mapper ids are taken as-is and
/// n = max id + 1. Throws MalformedLineError.
EdgeListParse parse_edge_list(std::istream& in, IdMapper* mapper = nullptr);

/// "+ u v [t]" or "- u v [t]" per line. Timestamps, where given, must not
/// decrease. Throws MalformedLineError, DecreasingTimestampError.
std::vector<EdgeEvent> parse_event_stream(std::istream& in, IdMapper* mapper = nullptr);

void write_edge_list(const DynamicGraph& g, std::ostream& out);
void write_event_stream(std::span<const EdgeEvent> events, std::ostream& out);

/// "vertex,far,closeness"; closeness printed with 12 significant digits.
void write_centrality_csv(const CentralityState& state, std::ostream& out);
void write_centrality_csv(const CentralityState& state, const std::filesystem::path& path);

EdgeListParse read_edge_list_file(const std::filesystem::path& path, IdMapper* mapper = nullptr);
std::vector<EdgeEvent> read_event_file(const std::filesystem::path& path,
                                       IdMapper* mapper = nullptr);

}  // namespace dyncc
