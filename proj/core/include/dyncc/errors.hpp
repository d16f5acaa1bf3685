#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "dyncc/types.hpp"

namespace dyncc {

/// Base class for violations of the simple-graph contract.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class SelfLoopError : public GraphError {
 public:
  explicit SelfLoopError(VertexId v);
};

class DuplicateEdgeError : public GraphError {
 public:
  DuplicateEdgeError(VertexId u, VertexId v);
};

class MissingEdgeError : public GraphError {
 public:
  MissingEdgeError(VertexId u, VertexId v);
};

class VertexRangeError : public GraphError {
 public:
  VertexRangeError(VertexId v, std::size_t vertex_count);
};

/// Malformed input line; `line()` is 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

class MalformedLineError : public ParseError {
 public:
  MalformedLineError(std::size_t line, const std::string& text);
};

class DecreasingTimestampError : public ParseError {
 public:
  DecreasingTimestampError(std::size_t line, std::int64_t previous, std::int64_t current);
};

class InsufficientNonBridgeEdgesError : public std::runtime_error {
 public:
  InsufficientNonBridgeEdgesError(std::size_t requested, std::size_t removed);
};

/// File could not be opened, read or written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An event of a replayed stream failed; wraps the original message.
class StreamError : public std::runtime_error {
 public:
  StreamError(std::size_t event_index, const std::string& what);
  std::size_t event_index() const noexcept { return event_index_; }

 private:
  std::size_t event_index_;
};

}  // namespace dyncc
