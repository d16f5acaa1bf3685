#include "dyncc/generators.hpp"

#include <algorithm>
#include <unordered_set>
#include <vector>

#include "dyncc/types.hpp"

namespace dyncc::gen {

namespace {

DynamicGraph fill_random(std::size_t n, std::size_t m, std::vector<Edge> edges,
                         std::mt19937_64& rng) {
  std::unordered_set<std::uint64_t> seen;
  for (const Edge& e : edges) seen.insert(edge_key(e.u, e.v));
  const std::size_t cap = n < 2 ? 0 : n * (n - 1) / 2;
  m = std::min(m, cap);
  std::uniform_int_distribution<VertexId> pick(0, n == 0 ? 0 : static_cast<VertexId>(n - 1));
  while (edges.size() < m) {
    const VertexId a = pick(rng);
    const VertexId b = pick(rng);
    if (a == b || !seen.insert(edge_key(a, b)).second) continue;
    edges.push_back(Edge{a, b}.normalized());
  }
  return DynamicGraph::from_edges(n, edges);
}

}  // namespace

DynamicGraph gnm(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  return fill_random(n, m, {}, rng);
}

DynamicGraph connected_gnm(std::size_t n, std::size_t m, std::mt19937_64& rng) {
  std::vector<Edge> tree;
  for (VertexId v = 1; v < n; ++v) {
    const auto parent = std::uniform_int_distribution<VertexId>(0, v - 1)(rng);
    tree.push_back(Edge{parent, v}.normalized());
  }
  return fill_random(n, std::max(m, tree.size()), std::move(tree), rng);
}

DynamicGraph preferential_attachment(std::size_t n, std::size_t edges_per_vertex,
                                     std::mt19937_64& rng) {
  const std::size_t k = std::max<std::size_t>(1, edges_per_vertex);
  std::vector<Edge> edges;
  std::vector<VertexId> endpoints;  // each vertex appears once per incident edge
  const std::size_t seed_size = std::min(n, k + 1);
  for (VertexId a = 0; a < seed_size; ++a) {
    for (VertexId b = a + 1; b < seed_size; ++b) {
      edges.push_back({a, b});
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }
  std::vector<VertexId> chosen;
  for (auto v = static_cast<VertexId>(seed_size); v < n; ++v) {
    chosen.clear();
    while (chosen.size() < k) {
      const VertexId t =
          endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
      if (std::find(chosen.begin(), chosen.end(), t) == chosen.end()) chosen.push_back(t);
    }
    for (VertexId t : chosen) {
      edges.push_back({t, v});
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return DynamicGraph::from_edges(n, edges);
}

DynamicGraph clustered_preferential_attachment(std::size_t n, std::size_t edges_per_vertex,
                                               double triad_probability, std::mt19937_64& rng) {
  const std::size_t k = std::max<std::size_t>(1, edges_per_vertex);
  const std::size_t seed_size = std::min(n, k + 1);
  DynamicGraph g(seed_size);
  std::vector<VertexId> endpoints;
  for (VertexId a = 0; a < seed_size; ++a) {
    for (VertexId b = a + 1; b < seed_size; ++b) {
      g.add_edge(a, b);
      endpoints.push_back(a);
      endpoints.push_back(b);
    }
  }
  std::bernoulli_distribution triad(triad_probability);
  std::vector<VertexId> chosen;
  for (auto v = static_cast<VertexId>(seed_size); v < n; ++v) {
    g.add_vertex();
    chosen.clear();
    VertexId last = kNoVertex;
    while (chosen.size() < k) {
      VertexId t = kNoVertex;
      if (last != kNoVertex && triad(rng)) {
        // A neighbor of the previous target not linked yet, if any.
        const auto nb = g.neighbors(last);
        std::vector<VertexId> open;
        for (VertexId w : nb) {
          if (w != v && !g.has_edge(v, w)) open.push_back(w);
        }
        if (!open.empty()) {
          t = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
        }
      }
      if (t == kNoVertex) {
        t = endpoints[std::uniform_int_distribution<std::size_t>(0, endpoints.size() - 1)(rng)];
        if (g.has_edge(v, t)) continue;
      }
      g.add_edge(v, t);
      chosen.push_back(t);
      last = t;
    }
    for (VertexId t : chosen) {
      endpoints.push_back(t);
      endpoints.push_back(v);
    }
  }
  return g;
}

}  // namespace dyncc::gen
