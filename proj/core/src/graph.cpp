#include "dyncc/graph.hpp"

#include <algorithm>

#include "dyncc/errors.hpp"

namespace dyncc {

DynamicGraph DynamicGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  DynamicGraph g(vertex_count);
  for (const Edge& e : edges) {
    if (e.u >= vertex_count) throw VertexRangeError(e.u, vertex_count);
    if (e.v >= vertex_count) throw VertexRangeError(e.v, vertex_count);
    if (e.u == e.v) throw SelfLoopError(e.u);
    g.adjacency_[e.u].push_back(e.v);
    g.adjacency_[e.v].push_back(e.u);
  }
  for (VertexId v = 0; v < vertex_count; ++v) {
    auto& list = g.adjacency_[v];
    std::sort(list.begin(), list.end());
    const auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end()) throw DuplicateEdgeError(v, *dup);
  }
  g.edge_count_ = edges.size();
  return g;
}

bool DynamicGraph::has_edge(VertexId u, VertexId v) const {
  if (u >= vertex_count() || v >= vertex_count()) return false;
  const auto& a = adjacency_[u].size() <= adjacency_[v].size() ? adjacency_[u] : adjacency_[v];
  const VertexId target = &a == &adjacency_[u] ? v : u;
  return std::binary_search(a.begin(), a.end(), target);
}

void DynamicGraph::check_insertable(VertexId u, VertexId v) const {
  if (u == v) throw SelfLoopError(u);
  const VertexId lo = std::min(u, v);
  const VertexId hi = std::max(u, v);
  const std::size_t n = vertex_count();
  if (lo > n) throw VertexRangeError(lo, n);
  if (hi > n + (lo == n ? 1 : 0)) throw VertexRangeError(hi, n);
  if (has_edge(u, v)) throw DuplicateEdgeError(u, v);
}

void DynamicGraph::add_edge(VertexId u, VertexId v) {
  check_insertable(u, v);
  ensure_vertices(static_cast<std::size_t>(std::max(u, v)) + 1);
  auto& au = adjacency_[u];
  au.insert(std::lower_bound(au.begin(), au.end(), v), v);
  auto& av = adjacency_[v];
  av.insert(std::lower_bound(av.begin(), av.end(), u), u);
  ++edge_count_;
}

void DynamicGraph::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) throw MissingEdgeError(u, v);
  auto& au = adjacency_[u];
  au.erase(std::lower_bound(au.begin(), au.end(), v));
  auto& av = adjacency_[v];
  av.erase(std::lower_bound(av.begin(), av.end(), u));
  --edge_count_;
}

VertexId DynamicGraph::add_vertex() {
  adjacency_.emplace_back();
  return static_cast<VertexId>(adjacency_.size() - 1);
}

void DynamicGraph::ensure_vertices(std::size_t vertex_count) {
  if (vertex_count > adjacency_.size()) adjacency_.resize(vertex_count);
}

std::vector<Edge> DynamicGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (VertexId u = 0; u < vertex_count(); ++u) {
    for (VertexId w : adjacency_[u]) {
      if (u < w) out.push_back({u, w});
    }
  }
  return out;
}

CsrGraph CsrGraph::from_graph(const DynamicGraph& g) {
  CsrGraph csr;
  const std::size_t n = g.vertex_count();
  csr.offsets_.resize(n + 1, 0);
  for (VertexId v = 0; v < n; ++v) csr.offsets_[v + 1] = csr.offsets_[v] + g.degree(v);
  csr.targets_.reserve(csr.offsets_[n]);
  for (VertexId v = 0; v < n; ++v) {
    const auto nb = g.neighbors(v);
    csr.targets_.insert(csr.targets_.end(), nb.begin(), nb.end());
  }
  return csr;
}

CsrGraph CsrGraph::from_edges(std::size_t vertex_count, std::span<const Edge> edges) {
  CsrGraph csr;
  csr.offsets_.assign(vertex_count + 1, 0);
  for (const Edge& e : edges) {
    ++csr.offsets_[e.u + 1];
    ++csr.offsets_[e.v + 1];
  }
  for (std::size_t i = 0; i < vertex_count; ++i) csr.offsets_[i + 1] += csr.offsets_[i];
  csr.targets_.resize(csr.offsets_[vertex_count]);
  std::vector<std::size_t> cursor(csr.offsets_.begin(), csr.offsets_.end() - 1);
  for (const Edge& e : edges) {
    csr.targets_[cursor[e.u]++] = e.v;
    csr.targets_[cursor[e.v]++] = e.u;
  }
  return csr;
}

ComponentLabels connected_components(const DynamicGraph& g) {
  const std::size_t n = g.vertex_count();
  ComponentLabels out;
  out.label.assign(n, kNoVertex);
  std::vector<VertexId> stack;
  for (VertexId root = 0; root < n; ++root) {
    if (out.label[root] != kNoVertex) continue;
    const auto id = static_cast<VertexId>(out.count++);
    out.label[root] = id;
    stack.push_back(root);
    while (!stack.empty()) {
      const VertexId x = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(x)) {
        if (out.label[w] == kNoVertex) {
          out.label[w] = id;
          stack.push_back(w);
        }
      }
    }
  }
  return out;
}

bool is_bridge(const DynamicGraph& g, VertexId u, VertexId v) {
  if (!g.has_edge(u, v)) throw MissingEdgeError(u, v);
  // Search from u for v while ignoring the edge itself.
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<VertexId> stack{u};
  seen[u] = true;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId w : g.neighbors(x)) {
      if (x == u && w == v) continue;
      if (w == v) return false;
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return true;
}

}  // namespace dyncc
