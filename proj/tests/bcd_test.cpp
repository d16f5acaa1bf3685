#include <gtest/gtest.h>

#include <random>

#include "dyncc/bcd.hpp"
#include "dyncc/errors.hpp"
#include "dyncc/generators.hpp"
#include "dyncc/oracle.hpp"
#include "dyncc/sssp.hpp"
#include "test_graphs.hpp"

namespace dyncc {
namespace {

using namespace testing;  // toy vertex names

std::vector<std::vector<Edge>> blocks(std::initializer_list<std::initializer_list<Edge>> list) {
  std::vector<std::vector<Edge>> out;
  for (const auto& block : list) {
    std::vector<Edge> edges;
    for (const Edge& e : block) edges.push_back(e.normalized());
    std::sort(edges.begin(), edges.end());
    out.push_back(std::move(edges));
  }
  std::sort(out.begin(), out.end());
  return out;
}

TEST(Decompose, TrianglePendant) {
  const auto pi = decompose(triangle_pendant());
  EXPECT_EQ(pi.component_count(), 2u);
  EXPECT_EQ(pi.canonical_blocks(), blocks({{{0, 1}, {0, 2}, {1, 2}}, {{2, 3}}}));
  EXPECT_EQ(pi.articulation_vertices(), (std::vector<VertexId>{2}));
  EXPECT_EQ(pi.canonical_blocks(), oracle::oracle_bcd(triangle_pendant()).canonical_blocks());
}

TEST(Decompose, PathIsAllBridges) {
  const auto pi = decompose(path_graph(4));
  EXPECT_EQ(pi.component_count(), 3u);
  EXPECT_EQ(pi.articulation_vertices(), (std::vector<VertexId>{1, 2}));
}

TEST(Decompose, CycleIsOneBlock) {
  const auto pi = decompose(cycle_graph(5));
  EXPECT_EQ(pi.component_count(), 1u);
  EXPECT_TRUE(pi.articulation_vertices().empty());
  EXPECT_EQ(pi.component_vertices(0).size(), 5u);
}

TEST(Decompose, IsolatedVerticesAndEmptyGraph) {
  EXPECT_EQ(decompose(DynamicGraph(4)).component_count(), 0u);
  EXPECT_EQ(decompose(DynamicGraph{}).component_count(), 0u);
}

TEST(Decompose, ComponentLookup) {
  const auto pi = decompose(triangle_pendant());
  EXPECT_EQ(pi.component_of(0, 1), pi.component_of(2, 1));
  EXPECT_NE(pi.component_of(0, 1), pi.component_of(3, 2));
  EXPECT_FALSE(pi.find_component(0, 3).has_value());
  EXPECT_THROW(pi.component_of(0, 3), MissingEdgeError);
}

TEST(Decompose, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 2 + trial % 9;
    const auto g = gen::gnm(n, rng() % (n * (n - 1) / 2 + 1), rng);
    const auto pi = decompose(g);
    EXPECT_EQ(pi.canonical_blocks(), oracle::oracle_bcd(g).canonical_blocks());
    EXPECT_EQ(pi.articulation_vertices(), oracle::oracle_articulation(g));
  }
}

TEST(MaintainOnInsert, ToyGraphMergesIntoCycle) {
  auto g = toy_graph();
  auto pi = decompose(g);
  EXPECT_EQ(pi.component_count(), 4u);
  g.add_edge(b, d);
  const auto out = maintain_on_insert(g, pi, b, d);
  EXPECT_TRUE(out.rebuilt);
  EXPECT_EQ(pi.component_count(), 3u);
  const auto verts = pi.component_vertices(out.cid);
  EXPECT_EQ(std::vector<VertexId>(verts.begin(), verts.end()), (std::vector<VertexId>{b, c, d}));
  EXPECT_EQ(pi.articulation_vertices(), (std::vector<VertexId>{b, d}));
}

TEST(MaintainOnInsert, ChordJoinsSharedComponent) {
  auto g = cycle_graph(5);
  auto pi = decompose(g);
  g.add_edge(0, 2);
  const auto out = maintain_on_insert(g, pi, 0, 2);
  EXPECT_FALSE(out.rebuilt);
  EXPECT_EQ(pi.component_count(), 1u);
  EXPECT_EQ(pi.component_of(0, 2), out.cid);
  EXPECT_EQ(pi.canonical_blocks(), decompose(g).canonical_blocks());
}

TEST(MaintainOnInsert, JoiningTreesMakesABridge) {
  auto g = make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}});
  auto pi = decompose(g);
  g.add_edge(2, 3);
  const auto out = maintain_on_insert(g, pi, 2, 3);
  EXPECT_TRUE(out.rebuilt);
  EXPECT_EQ(pi.component_edges(out.cid).size(), 1u);
  EXPECT_EQ(pi.canonical_blocks(), oracle::oracle_bcd(g).canonical_blocks());
}

TEST(MaintainOnInsert, GrowsWithNewVertex) {
  auto g = path_graph(3);
  auto pi = decompose(g);
  g.add_edge(2, 3);
  const auto out = maintain_on_insert(g, pi, 2, 3);
  EXPECT_EQ(pi.vertex_count(), 4u);
  EXPECT_EQ(pi.component_of(2, 3), out.cid);
  EXPECT_EQ(pi.canonical_blocks(), decompose(g).canonical_blocks());
}

TEST(MaintainOnInsert, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(32);
  std::size_t shared = 0;
  std::size_t rebuilt = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 3 + trial % 9;
    auto g = gen::gnm(n, rng() % (n * (n - 1) / 2), rng);
    auto pi = decompose(g);
    const Edge e = random_pair(g, false, rng);
    g.add_edge(e.u, e.v);
    const auto out = maintain_on_insert(g, pi, e.u, e.v);
    (out.rebuilt ? rebuilt : shared) += 1;
    EXPECT_EQ(pi.component_of(e.u, e.v), out.cid);
    EXPECT_EQ(pi.canonical_blocks(), oracle::oracle_bcd(g).canonical_blocks());
    EXPECT_EQ(pi.articulation_vertices(), oracle::oracle_articulation(g));
  }
  EXPECT_GT(shared, 0u);
  EXPECT_GT(rebuilt, 0u);
}

TEST(MaintainOnDelete, CycleSplitsIntoBridges) {
  auto g = cycle_graph(4);
  auto pi = decompose(g);
  const ComponentId before = pi.component_of(0, 3);
  g.remove_edge(0, 3);
  EXPECT_EQ(maintain_on_delete(g, pi, 0, 3), before);
  EXPECT_EQ(pi.component_count(), 3u);
  EXPECT_EQ(pi.canonical_blocks(), oracle::oracle_bcd(path_graph(4)).canonical_blocks());
}

TEST(MaintainOnDelete, PendantLeavesTriangle) {
  auto g = triangle_pendant();
  auto pi = decompose(g);
  g.remove_edge(2, 3);
  maintain_on_delete(g, pi, 2, 3);
  EXPECT_EQ(pi.canonical_blocks(), blocks({{{0, 1}, {0, 2}, {1, 2}}}));
}

TEST(MaintainOnDelete, K4MinusEdgeStaysBiconnected) {
  auto g = complete_graph(4);
  auto pi = decompose(g);
  g.remove_edge(0, 1);
  maintain_on_delete(g, pi, 0, 1);
  EXPECT_EQ(pi.component_count(), 1u);
}

TEST(MaintainOnDelete, MissingEdgeThrows) {
  auto g = path_graph(3);
  auto pi = decompose(g);
  EXPECT_THROW(maintain_on_delete(g, pi, 0, 2), MissingEdgeError);
}

TEST(DeletionScope, DropsTheDeletedEdge) {
  const auto g = triangle_pendant();
  const auto pi = decompose(g);
  const auto scope = deletion_scope(pi, 0, 1);
  EXPECT_EQ(scope.vertices, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_EQ(scope.edges.size(), 2u);
  EXPECT_EQ(scope.articulation, (std::vector<VertexId>{2}));
}

TEST(Representatives, TriangleWithTail) {
  // a,b,c = 0,1,2 triangle; tail c-d-e.
  const auto g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
  const auto pi = decompose(g);
  const auto info = build_representatives(g, pi, pi.component_of(0, 1));
  EXPECT_EQ(info.rep, (std::vector<VertexId>{0, 1, 2, 2, 2}));
  EXPECT_EQ(info.represented_count, (std::vector<std::uint64_t>{1, 1, 3, 0, 0}));
  EXPECT_EQ(info.represented_farness, (std::vector<std::uint64_t>{0, 0, 3, 0, 0}));
  EXPECT_EQ(info.rep_distance[4], 2u);
}

TEST(Representatives, ToyGraphAfterInsertion) {
  auto g = toy_graph();
  auto pi = decompose(g);
  g.add_edge(b, d);
  const auto out = maintain_on_insert(g, pi, b, d);
  const auto info = build_representatives(g, pi, out.cid);
  EXPECT_EQ(info.represented_count[b], 2u);
  EXPECT_EQ(info.represented_count[c], 1u);
  EXPECT_EQ(info.represented_count[d], 5u);
  EXPECT_EQ(info.represented_farness[b], 1u);
  EXPECT_EQ(info.represented_farness[c], 0u);
  EXPECT_EQ(info.represented_farness[d], 6u);
  EXPECT_EQ(info.rep[a], b);
  for (VertexId x : {e, f, g_, h}) EXPECT_EQ(info.rep[x], d);
}

TEST(Representatives, OtherConnectedComponentIsUnrepresented) {
  const auto g = make_graph(5, {{0, 1}, {1, 2}, {0, 2}, {3, 4}});
  const auto pi = decompose(g);
  const auto info = build_representatives(g, pi, pi.component_of(0, 1));
  EXPECT_EQ(info.rep[3], kNoVertex);
  EXPECT_EQ(info.rep[4], kNoVertex);
}

// Accounting identity, uniqueness (no throw) and the distance decomposition
// through representatives.
TEST(Representatives, PropertiesOnRandomGraphs) {
  std::mt19937_64 rng(33);
  for (int trial = 0; trial < 150; ++trial) {
    const auto g = gen::gnm(14, 16 + trial % 10, rng);
    const auto pi = decompose(g);
    for (ComponentId cid = 0; cid < pi.component_count(); ++cid) {
      const auto info = build_representatives(g, pi, cid);
      std::uint64_t total = 0;
      std::size_t represented = 0;
      for (VertexId x = 0; x < g.vertex_count(); ++x) {
        total += info.represented_count[x];
        represented += info.rep[x] != kNoVertex;
      }
      EXPECT_EQ(total, represented);

      for (VertexId x = 0; x < g.vertex_count(); ++x) {
        if (info.rep[x] == kNoVertex) continue;
        const auto dx = sssp_distances(g, x, SsspMode::TopDown);
        EXPECT_EQ(dx[info.rep[x]], info.rep_distance[x]);
        const auto dr = sssp_distances(g, info.rep[x], SsspMode::TopDown);
        for (VertexId y = 0; y < g.vertex_count(); ++y) {
          if (info.rep[y] == kNoVertex || info.rep[y] == info.rep[x]) continue;
          EXPECT_EQ(dx[y], info.rep_distance[x] + dr[info.rep[y]] + info.rep_distance[y]);
        }
      }
    }
  }
}

}  // namespace
}  // namespace dyncc
