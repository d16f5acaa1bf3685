#include "dyncc/bcd.hpp"

#include <algorithm>
#include <stdexcept>

#include "dyncc/errors.hpp"

namespace dyncc {

struct BcdMaintenance {
  static void attach(BcdPartition& pi, ComponentId cid, VertexId u, VertexId v) {
    pi.edge_component_.emplace(edge_key(u, v), cid);
    pi.edges_[cid].push_back(Edge{u, v}.normalized());
  }
  static void grow(BcdPartition& pi, std::size_t vertex_count) {
    if (pi.touch_.size() < vertex_count) pi.touch_.resize(vertex_count, 0);
  }
};

BcdPartition BcdPartition::from_blocks(std::size_t vertex_count,
                                       std::vector<std::vector<Edge>> blocks) {
  BcdPartition pi;
  pi.touch_.assign(vertex_count, 0);
  std::size_t total = 0;
  for (const auto& b : blocks) total += b.size();
  pi.edge_component_.reserve(total);
  pi.edges_.reserve(blocks.size());
  pi.vertices_.reserve(blocks.size());
  for (auto& b : blocks) pi.add_block(std::move(b));
  return pi;
}

void BcdPartition::add_block(std::vector<Edge> edges) {
  const auto cid = static_cast<ComponentId>(edges_.size());
  std::vector<VertexId> verts;
  verts.reserve(edges.size() + 1);
  for (Edge& e : edges) {
    e = e.normalized();
    if (!edge_component_.emplace(edge_key(e.u, e.v), cid).second) {
      throw std::invalid_argument("edge assigned to two components");
    }
    verts.push_back(e.u);
    verts.push_back(e.v);
  }
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  for (VertexId x : verts) {
    if (x >= touch_.size()) touch_.resize(static_cast<std::size_t>(x) + 1, 0);
    ++touch_[x];
  }
  edges_.push_back(std::move(edges));
  vertices_.push_back(std::move(verts));
}

std::optional<ComponentId> BcdPartition::find_component(VertexId u, VertexId v) const {
  const auto it = edge_component_.find(edge_key(u, v));
  if (it == edge_component_.end()) return std::nullopt;
  return it->second;
}

ComponentId BcdPartition::component_of(VertexId u, VertexId v) const {
  const auto c = find_component(u, v);
  if (!c) throw MissingEdgeError(u, v);
  return *c;
}

std::vector<VertexId> BcdPartition::articulation_vertices() const {
  std::vector<VertexId> out;
  for (VertexId v = 0; v < touch_.size(); ++v) {
    if (touch_[v] >= 2) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> BcdPartition::articulation_vertices_of(ComponentId c) const {
  std::vector<VertexId> out;
  for (VertexId v : vertices_[c]) {
    if (touch_[v] >= 2) out.push_back(v);
  }
  return out;
}

std::vector<std::vector<Edge>> BcdPartition::canonical_blocks() const {
  std::vector<std::vector<Edge>> out = edges_;
  for (auto& b : out) std::sort(b.begin(), b.end());
  std::sort(out.begin(), out.end());
  return out;
}

BcdPartition decompose(const DynamicGraph& g) {
  constexpr VertexId kUnseen = kNoVertex;
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> disc(n, kUnseen);
  std::vector<VertexId> low(n, 0);
  VertexId timer = 0;

  struct Frame {
    VertexId v;
    VertexId parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Edge>> blocks;

  for (VertexId root = 0; root < n; ++root) {
    if (disc[root] != kUnseen || g.degree(root) == 0) continue;
    disc[root] = low[root] = timer++;
    stack.push_back({root, kNoVertex, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const VertexId v = top.v;
      const auto nb = g.neighbors(v);
      if (top.next < nb.size()) {
        const VertexId w = nb[top.next++];
        if (w == top.parent) continue;
        if (disc[w] == kUnseen) {
          edge_stack.push_back({v, w});
          disc[w] = low[w] = timer++;
          stack.push_back({w, v, 0});
        } else if (disc[w] < disc[v]) {
          edge_stack.push_back({v, w});
          low[v] = std::min(low[v], disc[w]);
        }
        continue;
      }
      const VertexId parent = top.parent;
      stack.pop_back();
      if (parent == kNoVertex) continue;
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        // parent separates v's subtree: everything above the tree edge is one block
        std::vector<Edge> block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e);
          if (e.u == parent && e.v == v) break;
        }
        blocks.push_back(std::move(block));
      }
    }
  }
  return BcdPartition::from_blocks(n, std::move(blocks));
}

namespace {

std::vector<ComponentId> incident_components(const DynamicGraph& g, const BcdPartition& pi,
                                             VertexId x, VertexId skip) {
  std::vector<ComponentId> out;
  for (VertexId w : g.neighbors(x)) {
    if (w == skip) continue;
    out.push_back(pi.component_of(x, w));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

InsertOutcome maintain_on_insert(const DynamicGraph& g_after, BcdPartition& pi, VertexId u,
                                 VertexId v) {
  BcdMaintenance::grow(pi, g_after.vertex_count());
  const auto cu = incident_components(g_after, pi, u, v);
  const auto cv = incident_components(g_after, pi, v, u);
  std::vector<ComponentId> common;
  std::set_intersection(cu.begin(), cu.end(), cv.begin(), cv.end(), std::back_inserter(common));
  if (!common.empty()) {
    // Two components share at most one vertex, so u and v meet in exactly one.
    BcdMaintenance::attach(pi, common.front(), u, v);
    return {common.front(), false};
  }
  pi = decompose(g_after);
  return {pi.component_of(u, v), true};
}

ComponentId maintain_on_delete(const DynamicGraph& g_after, BcdPartition& pi, VertexId u,
                               VertexId v) {
  const ComponentId before = pi.component_of(u, v);
  pi = decompose(g_after);
  return before;
}

ComponentScope scope_of(const BcdPartition& pi, ComponentId cid) {
  ComponentScope scope;
  const auto verts = pi.component_vertices(cid);
  scope.vertices.assign(verts.begin(), verts.end());
  const auto edges = pi.component_edges(cid);
  scope.edges.assign(edges.begin(), edges.end());
  scope.articulation = pi.articulation_vertices_of(cid);
  return scope;
}

ComponentScope deletion_scope(const BcdPartition& pi, VertexId u, VertexId v) {
  ComponentScope scope = scope_of(pi, pi.component_of(u, v));
  const Edge gone = Edge{u, v}.normalized();
  std::erase(scope.edges, gone);
  return scope;
}

RepInfo build_representatives(const DynamicGraph& g_after, const ComponentScope& scope) {
  const std::size_t n = g_after.vertex_count();
  RepInfo info;
  info.rep.assign(n, kNoVertex);
  info.rep_distance.assign(n, kUnreachable);
  info.represented_count.assign(n, 0);
  info.represented_farness.assign(n, 0);

  for (VertexId x : scope.vertices) {
    info.rep[x] = x;
    info.rep_distance[x] = 0;
    info.represented_count[x] = 1;
  }

  // Vertices outside the scope hang off exactly one scope vertex; walk each
  // hanging part without re-entering the scope.
  std::vector<VertexId> queue;
  for (VertexId a : scope.articulation) {
    queue.clear();
    queue.push_back(a);
    std::uint64_t count = 0;
    std::uint64_t dist_sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const VertexId x = queue[head];
      const Distance dx = info.rep_distance[x];
      for (VertexId w : g_after.neighbors(x)) {
        if (info.rep[w] == kNoVertex) {
          info.rep[w] = a;
          info.rep_distance[w] = dx + 1;
          ++count;
          dist_sum += dx + 1;
          queue.push_back(w);
        } else if (info.rep[w] != a) {
          if (x == a && info.rep[w] == w) continue;  // edge inside the scope
          throw std::logic_error("vertex represented by two articulation vertices");
        }
      }
    }
    info.represented_count[a] += count;
    info.represented_farness[a] += dist_sum;
  }
  return info;
}

RepInfo build_representatives(const DynamicGraph& g_after, const BcdPartition& pi_after,
                              ComponentId cid) {
  return build_representatives(g_after, scope_of(pi_after, cid));
}

}  // namespace dyncc
