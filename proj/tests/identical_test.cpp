#include <gtest/gtest.h>

#include <random>

#include "dyncc/closeness.hpp"
#include "dyncc/generators.hpp"
#include "dyncc/identical.hpp"
#include "dyncc/oracle.hpp"
#include "test_graphs.hpp"

namespace dyncc {
namespace {

using testing::make_graph;
using Classes = std::vector<std::vector<VertexId>>;

constexpr IdentityKind kKinds[] = {IdentityKind::TypeI, IdentityKind::TypeII};

bool together(const IdenticalClasses& classes, VertexId x, VertexId y) {
  return classes.class_of(x) == classes.class_of(y);
}

TEST(BuildClasses, TwinsOverTwoVertices) {
  // 0 and 1 are both adjacent to exactly {2, 3}.
  const auto g = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  const auto classes = build_classes(g, IdentityKind::TypeI);
  EXPECT_TRUE(together(classes, 0, 1));
  EXPECT_EQ(classes.canonical(), (Classes{{0, 1}, {2, 3}}));
}

TEST(BuildClasses, TriangleIsOneClosedClass) {
  const auto classes = build_classes(testing::complete_graph(3), IdentityKind::TypeII);
  EXPECT_EQ(classes.class_count(), 1u);
  EXPECT_EQ(classes.canonical(), (Classes{{0, 1, 2}}));
  EXPECT_EQ(build_classes(testing::complete_graph(3), IdentityKind::TypeI).class_count(), 3u);
}

TEST(BuildClasses, EqualHashDifferentNeighborhoods) {
  // Γ(0) = {1,4} and Γ(5) = {2,3} both sum to 5.
  const auto g = make_graph(6, {{0, 1}, {0, 4}, {5, 2}, {5, 3}});
  const auto classes = build_classes(g, IdentityKind::TypeI);
  EXPECT_FALSE(together(classes, 0, 5));
  EXPECT_EQ(classes.canonical(), oracle::oracle_identical(g, IdentityKind::TypeI));
}

TEST(BuildClasses, IsolatedVerticesShareTheEmptyNeighborhood) {
  const auto g = make_graph(4, {{0, 1}});
  EXPECT_TRUE(together(build_classes(g, IdentityKind::TypeI), 2, 3));
  EXPECT_FALSE(together(build_classes(g, IdentityKind::TypeII), 2, 3));
}

TEST(BuildClasses, MatchesOracleOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 100; ++trial) {
    const auto g = gen::gnm(25, 10 + trial, rng);
    for (IdentityKind kind : kKinds) {
      EXPECT_EQ(build_classes(g, kind).canonical(), oracle::oracle_identical(g, kind));
    }
  }
}

TEST(MaintainClasses, NewNeighborBreaksTwins) {
  auto g = make_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto classes = build_classes(g, IdentityKind::TypeI);
  g.add_edge(0, 4);
  maintain_on_edge_change(classes, g, 0, 4);
  EXPECT_FALSE(together(classes, 0, 1));
  EXPECT_EQ(classes.canonical(), build_classes(g, IdentityKind::TypeI).canonical());
}

TEST(MaintainClasses, LinkingTwinsTurnsThemClosed) {
  auto g = make_graph(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  auto open = build_classes(g, IdentityKind::TypeI);
  auto closed = build_classes(g, IdentityKind::TypeII);
  EXPECT_FALSE(together(closed, 0, 1));
  g.add_edge(0, 1);
  maintain_on_edge_change(open, g, 0, 1);
  maintain_on_edge_change(closed, g, 0, 1);
  EXPECT_TRUE(together(closed, 0, 1));
  EXPECT_FALSE(together(open, 0, 1));
  EXPECT_EQ(closed.canonical(), build_classes(g, IdentityKind::TypeII).canonical());
  EXPECT_EQ(open.canonical(), build_classes(g, IdentityKind::TypeI).canonical());
}

TEST(MaintainClasses, DeletingTheAddedEdgeRestores) {
  auto g = make_graph(5, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
  for (IdentityKind kind : kKinds) {
    auto classes = build_classes(g, kind);
    const auto original = classes.canonical();
    g.add_edge(0, 4);
    maintain_on_edge_change(classes, g, 0, 4);
    g.remove_edge(0, 4);
    maintain_on_edge_change(classes, g, 0, 4);
    EXPECT_EQ(classes.canonical(), original);
  }
}

TEST(MaintainClasses, HandlesVertexGrowth) {
  auto g = testing::path_graph(3);
  auto classes = build_classes(g, IdentityKind::TypeI);
  g.add_edge(2, 3);
  maintain_on_edge_change(classes, g, 2, 3);
  EXPECT_EQ(classes.vertex_count(), 4u);
  EXPECT_EQ(classes.canonical(), build_classes(g, IdentityKind::TypeI).canonical());
}

TEST(MaintainClasses, AgreesWithRebuildUnderRandomPerturbations) {
  std::mt19937_64 rng(42);
  for (IdentityKind kind : kKinds) {
    auto g = gen::gnm(30, 45, rng);
    auto classes = build_classes(g, kind);
    for (int step = 0; step < 500; ++step) {
      const bool insert = g.edge_count() == 0 || rng() % 2 == 0;
      const Edge e = testing::random_pair(g, !insert, rng);
      insert ? g.add_edge(e.u, e.v) : g.remove_edge(e.u, e.v);
      maintain_on_edge_change(classes, g, e.u, e.v);
      ASSERT_EQ(classes.canonical(), oracle::oracle_identical(g, kind)) << "step " << step;
    }
  }
}

TEST(ClassMembers, ShareFarness) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 30; ++trial) {
    const auto g = gen::gnm(60, 50 + trial * 3, rng);
    const auto far = oracle::oracle_closeness(g).far;
    for (IdentityKind kind : kKinds) {
      for (const auto& cls : build_classes(g, kind).canonical()) {
        for (VertexId x : cls) EXPECT_EQ(far[x], far[cls.front()]);
      }
    }
  }
}

TEST(ClassRepresentatives, SmallestMemberInScope) {
  // 3, 7 and 9 all see exactly {0, 1}.
  const auto g = make_graph(10, {{3, 0}, {3, 1}, {7, 0}, {7, 1}, {9, 0}, {9, 1}, {2, 4}});
  const auto classes = build_classes(g, IdentityKind::TypeI);
  const std::vector<VertexId> all{0, 1, 2, 3, 4, 5, 6, 7, 8, 9};
  const auto reps = class_representatives(classes, all);
  EXPECT_EQ(reps.at(classes.class_of(9)), 3u);
  EXPECT_EQ(reps.at(classes.class_of(2)), 2u);

  const std::vector<VertexId> partial{7, 9};
  EXPECT_EQ(class_representatives(classes, partial).at(classes.class_of(3)), 7u);

  const std::vector<VertexId> narrow{0};
  const auto only = class_representatives(classes, narrow);
  EXPECT_EQ(only.size(), 1u);
  EXPECT_FALSE(only.contains(classes.class_of(3)));
}

}  // namespace
}  // namespace dyncc
