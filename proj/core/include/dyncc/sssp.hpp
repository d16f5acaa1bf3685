#pragma once

#include <concepts>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "dyncc/graph.hpp"
#include "dyncc/types.hpp"

namespace dyncc {

enum class SsspMode : std::uint8_t { TopDown, BottomUp, Hybrid };
enum class Direction : std::uint8_t { TopDown, BottomUp };

struct SsspOptions {
  SsspMode mode = SsspMode::TopDown;
  // Switching ratio for hybrid traversals; 1 compares edge counts directly.
  double alpha = 1.0;
};

/// Per-level direction choice: go bottom-up iff the frontier's edges
/// outnumber the unvisited vertices' edges scaled by 1/alpha. Ties stay
/// top-down.
constexpr Direction choose_direction(std::uint64_t frontier_edge_sum,
                                     std::uint64_t unvisited_edge_sum, double alpha) {
  return static_cast<double>(frontier_edge_sum) > static_cast<double>(unvisited_edge_sum) / alpha
             ? Direction::BottomUp
             : Direction::TopDown;
}

template <class G>
concept AdjacencyGraph = requires(const G& g, VertexId v) {
  { g.vertex_count() } -> std::convertible_to<std::size_t>;
  { g.degree(v) } -> std::convertible_to<std::size_t>;
  { g.neighbors(v) } -> std::convertible_to<std::span<const VertexId>>;
};

/// Scratch buffers for repeated traversals. One per thread.
class BfsWorkspace {
 public:
  std::span<const Distance> distances() const { return dist_; }
  DistanceArray take_distances() { return std::move(dist_); }

  struct LevelTrace {
    std::size_t top_down = 0;
    std::size_t bottom_up = 0;
  };
  const LevelTrace& trace() const { return trace_; }

  template <AdjacencyGraph G, class Visit>
  friend void breadth_first(const G& g, VertexId source, const SsspOptions& options,
                            BfsWorkspace& ws, Visit&& visit);

 private:
  bool in_frontier(VertexId v) const { return (frontier_bits_[v >> 6] >> (v & 63)) & 1U; }
  void flip_frontier_bits() {
    for (VertexId v : frontier_) frontier_bits_[v >> 6] ^= std::uint64_t{1} << (v & 63);
  }

  DistanceArray dist_;
  std::vector<VertexId> frontier_;
  std::vector<VertexId> next_;
  std::vector<VertexId> unvisited_;
  std::vector<std::uint64_t> frontier_bits_;
  LevelTrace trace_;
};

/// Level-synchronous BFS from `source`. `visit(w, d)` fires once for every
/// vertex other than the source as it is discovered at distance d. Distances
/// are left in `ws.distances()`.
template <AdjacencyGraph G, class Visit>
void breadth_first(const G& g, VertexId source, const SsspOptions& options, BfsWorkspace& ws,
                   Visit&& visit) {
  const std::size_t n = g.vertex_count();
  ws.dist_.assign(n, kUnreachable);
  ws.frontier_.clear();
  ws.trace_ = {};
  bool unvisited_ready = false;

  std::uint64_t unvisited_edges = 0;
  if (options.mode != SsspMode::TopDown) {
    for (VertexId v = 0; v < n; ++v) unvisited_edges += g.degree(v);
    ws.frontier_bits_.assign((n + 63) / 64, 0);
  }
  ws.dist_[source] = 0;
  ws.frontier_.push_back(source);
  std::uint64_t frontier_edges = g.degree(source);
  unvisited_edges -= options.mode != SsspMode::TopDown ? frontier_edges : 0;

  Distance level = 0;
  while (!ws.frontier_.empty()) {
    Direction dir = Direction::TopDown;
    if (options.mode == SsspMode::BottomUp) {
      dir = Direction::BottomUp;
    } else if (options.mode == SsspMode::Hybrid) {
      dir = choose_direction(frontier_edges, unvisited_edges, options.alpha);
    }

    const Distance next_level = level + 1;
    std::uint64_t next_edges = 0;
    ws.next_.clear();
    if (dir == Direction::TopDown) {
      ++ws.trace_.top_down;
      for (VertexId v : ws.frontier_) {
        for (VertexId w : g.neighbors(v)) {
          if (ws.dist_[w] != kUnreachable) continue;
          ws.dist_[w] = next_level;
          ws.next_.push_back(w);
          next_edges += g.degree(w);
          visit(w, next_level);
        }
      }
    } else {
      ++ws.trace_.bottom_up;
      if (!unvisited_ready) {
        ws.unvisited_.clear();
        for (VertexId v = 0; v < n; ++v) {
          if (ws.dist_[v] == kUnreachable) ws.unvisited_.push_back(v);
        }
        unvisited_ready = true;
      }
      ws.flip_frontier_bits();
      std::size_t keep = 0;
      for (VertexId w : ws.unvisited_) {
        if (ws.dist_[w] != kUnreachable) continue;  // found by an earlier top-down level
        bool found = false;
        for (VertexId x : g.neighbors(w)) {
          if (ws.in_frontier(x)) {
            found = true;
            break;
          }
        }
        if (!found) {
          ws.unvisited_[keep++] = w;
          continue;
        }
        ws.dist_[w] = next_level;
        ws.next_.push_back(w);
        next_edges += g.degree(w);
        visit(w, next_level);
      }
      ws.unvisited_.resize(keep);
      ws.flip_frontier_bits();
    }
    if (options.mode != SsspMode::TopDown) unvisited_edges -= next_edges;
    frontier_edges = next_edges;
    ws.frontier_.swap(ws.next_);
    level = next_level;
  }
}

template <AdjacencyGraph G>
void breadth_first(const G& g, VertexId source, const SsspOptions& options, BfsWorkspace& ws) {
  breadth_first(g, source, options, ws, [](VertexId, Distance) {});
}

/// Hop distances from `s`; unreachable vertices hold kUnreachable.
DistanceArray sssp_distances(const DynamicGraph& g, VertexId s, SsspMode mode,
                             double alpha = 1.0);

}  // namespace dyncc
