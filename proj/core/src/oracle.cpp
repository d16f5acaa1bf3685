#include "dyncc/oracle.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace dyncc::oracle {

CentralityState oracle_closeness(const DynamicGraph& g) {
  const std::size_t n = g.vertex_count();
  CentralityState state;
  state.far.assign(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    std::vector<long long> dist(n, -1);
    std::queue<VertexId> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (VertexId w : g.neighbors(x)) {
        if (dist[w] < 0) {
          dist[w] = dist[x] + 1;
          q.push(w);
        }
      }
    }
    for (long long d : dist) {
      if (d > 0) state.far[s] += static_cast<std::uint64_t>(d);
    }
  }
  return state;
}

namespace {

// Component label per vertex with `removed` deleted (label -1 for it).
std::vector<int> labels_without(const DynamicGraph& g, VertexId removed, int& count) {
  const std::size_t n = g.vertex_count();
  std::vector<int> label(n, -1);
  count = 0;
  for (VertexId r = 0; r < n; ++r) {
    if (r == removed || label[r] >= 0) continue;
    std::queue<VertexId> q;
    label[r] = count;
    q.push(r);
    while (!q.empty()) {
      const VertexId x = q.front();
      q.pop();
      for (VertexId w : g.neighbors(x)) {
        if (w != removed && label[w] < 0) {
          label[w] = count;
          q.push(w);
        }
      }
    }
    ++count;
  }
  return label;
}

}  // namespace

std::vector<VertexId> oracle_articulation(const DynamicGraph& g) {
  int base = 0;
  labels_without(g, kNoVertex, base);
  std::vector<VertexId> out;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    int without = 0;
    labels_without(g, v, without);
    if (without > base) out.push_back(v);
  }
  return out;
}

BcdPartition oracle_bcd(const DynamicGraph& g) {
  // Two edges share a block iff they lie on a common simple cycle. For a
  // simple graph that is the same as: for every vertex x, some endpoint of
  // each edge other than x survives and the survivors stay connected in G - x.
  const std::size_t n = g.vertex_count();
  const std::vector<Edge> edges = g.edges();
  std::vector<std::vector<int>> without(n + 1);
  int unused = 0;
  without[n] = labels_without(g, kNoVertex, unused);
  for (VertexId x = 0; x < n; ++x) without[x] = labels_without(g, x, unused);

  auto survivor = [](const Edge& e, VertexId x) { return e.u != x ? e.u : e.v; };
  auto same_block = [&](const Edge& a, const Edge& b) {
    if (without[n][a.u] != without[n][b.u]) return false;
    for (VertexId x = 0; x < n; ++x) {
      if (without[x][survivor(a, x)] != without[x][survivor(b, x)]) return false;
    }
    return true;
  };

  std::vector<int> block_of(edges.size(), -1);
  std::vector<std::vector<Edge>> blocks;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (block_of[i] >= 0) continue;
    block_of[i] = static_cast<int>(blocks.size());
    blocks.push_back({edges[i]});
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      if (block_of[j] < 0 && same_block(edges[i], edges[j])) {
        block_of[j] = block_of[i];
        blocks.back().push_back(edges[j]);
      }
    }
  }
  return BcdPartition::from_blocks(n, std::move(blocks));
}

std::vector<std::vector<VertexId>> oracle_identical(const DynamicGraph& g, IdentityKind kind) {
  const std::size_t n = g.vertex_count();
  std::vector<std::set<VertexId>> hood(n);
  for (VertexId x = 0; x < n; ++x) {
    for (VertexId w : g.neighbors(x)) hood[x].insert(w);
    if (kind == IdentityKind::TypeII) hood[x].insert(x);
  }
  std::vector<bool> taken(n, false);
  std::vector<std::vector<VertexId>> classes;
  for (VertexId x = 0; x < n; ++x) {
    if (taken[x]) continue;
    classes.push_back({x});
    taken[x] = true;
    for (VertexId y = x + 1; y < n; ++y) {
      if (!taken[y] && hood[x] == hood[y]) {
        classes.back().push_back(y);
        taken[y] = true;
      }
    }
  }
  return classes;
}

}  // namespace dyncc::oracle
