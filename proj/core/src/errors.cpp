#include "dyncc/errors.hpp"

namespace dyncc {

namespace {

std::string edge_text(VertexId u, VertexId v) {
  return "(" + std::to_string(u) + ", " + std::to_string(v) + ")";
}

}  // namespace

SelfLoopError::SelfLoopError(VertexId v)
    : GraphError("self-loop at vertex " + std::to_string(v)) {}

DuplicateEdgeError::DuplicateEdgeError(VertexId u, VertexId v)
    : GraphError("edge " + edge_text(u, v) + " already present") {}

MissingEdgeError::MissingEdgeError(VertexId u, VertexId v)
    : GraphError("edge " + edge_text(u, v) + " not present") {}

VertexRangeError::VertexRangeError(VertexId v, std::size_t vertex_count)
    : GraphError("vertex " + std::to_string(v) + " out of range for graph with " +
                 std::to_string(vertex_count) + " vertices") {}

ParseError::ParseError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

MalformedLineError::MalformedLineError(std::size_t line, const std::string& text)
    : ParseError(line, "malformed line '" + text + "'") {}

DecreasingTimestampError::DecreasingTimestampError(std::size_t line, std::int64_t previous,
                                                   std::int64_t current)
    : ParseError(line, "timestamp " + std::to_string(current) + " precedes " +
                           std::to_string(previous)) {}

InsufficientNonBridgeEdgesError::InsufficientNonBridgeEdgesError(std::size_t requested,
                                                                 std::size_t removed)
    : std::runtime_error("requested " + std::to_string(requested) +
                         " non-bridge edges but only " + std::to_string(removed) +
                         " could be removed") {}

StreamError::StreamError(std::size_t event_index, const std::string& what)
    : std::runtime_error("event " + std::to_string(event_index) + ": " + what),
      event_index_(event_index) {}

}  // namespace dyncc
