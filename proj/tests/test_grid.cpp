#include <gtest/gtest.h>

#include <random>

#include "bdcert/grid.hpp"
#include "support.hpp"

namespace bdcert {
namespace {

struct Shape {
  FactorKind rk;
  int m;
  FactorKind ck;
  int n;
};

std::vector<Shape> shapes_up_to(int max_vertices) {
  std::vector<Shape> out;
  for (FactorKind rk : {FactorKind::Path, FactorKind::Cycle})
    for (FactorKind ck : {FactorKind::Path, FactorKind::Cycle})
      for (int m = rk == FactorKind::Cycle ? 3 : 1; m * 1 <= max_vertices; ++m)
        for (int n = ck == FactorKind::Cycle ? 3 : 1; m * n <= max_vertices; ++n)
          out.push_back({rk, m, ck, n});
  return out;
}

TEST(Grid, DistancesMatchBfs) {
  for (const Shape& s : shapes_up_to(30)) {
    const Grid g = build_grid(s.rk, s.m, s.ck, s.n);
    const auto d = testing::bfs_distances(testing::adjacency(s.rk, s.m, s.ck, s.n));
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int v = 0; v < g.vertex_count(); ++v)
        ASSERT_EQ(g.distance(u, v), d[u][v]) << g.name() << ' ' << u << ' ' << v;
  }
}

TEST(Grid, BallsMatchBfs) {
  for (const Shape& s : shapes_up_to(30)) {
    const Grid g = build_grid(s.rk, s.m, s.ck, s.n);
    const BallTable balls(g);
    const auto d = testing::bfs_distances(testing::adjacency(s.rk, s.m, s.ck, s.n));
    for (int u = 0; u < g.vertex_count(); ++u)
      for (int r = 0; r <= 2; ++r) {
        VertexSet want;
        for (int v = 0; v < g.vertex_count(); ++v)
          if (d[u][v] <= r) want.insert(v);
        ASSERT_EQ(g.ball(u, r), want);
        ASSERT_EQ(balls.ball(u, r), want);
      }
  }
}

TEST(Grid, EdgeCountAndIndexing) {
  const Grid g = build_grid(FactorKind::Cycle, 3, FactorKind::Path, 4);
  EXPECT_EQ(g.vertex_count(), 12);
  EXPECT_EQ(g.edge_count(), 3 * 3 + 3 * 4);
  for (int i = 0; i < g.vertex_count(); ++i) EXPECT_EQ(g.index(g.vertex(i)), i);
  EXPECT_EQ(g.name(), "C3xP4");
  EXPECT_THROW((void)g.index({4, 1}), std::out_of_range);
}

TEST(Grid, RejectsBadShapes) {
  EXPECT_THROW((void)build_grid(FactorKind::Cycle, 2, FactorKind::Path, 4), std::invalid_argument);
  EXPECT_THROW((void)build_grid(FactorKind::Path, 0, FactorKind::Path, 4), std::invalid_argument);
  EXPECT_THROW((void)build_grid(FactorKind::Path, 20, FactorKind::Path, 20), std::invalid_argument);
  EXPECT_THROW((void)parse_factor_kind("tree"), std::invalid_argument);
  EXPECT_EQ(parse_factor_kind("C"), FactorKind::Cycle);
}

TEST(Broadcast, StrengthLimits) {
  Broadcast f(build_grid(FactorKind::Path, 2, FactorKind::Path, 2));
  EXPECT_THROW(f.set({1, 1}, 3), std::invalid_argument);
  f.set({1, 1}, 2);
  EXPECT_EQ(f.cost(), 2);
  EXPECT_EQ(format_matrix(f), "2 0\n0 0\n");
}

TEST(BroadcastAlgebra, Identities) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const Grid g = build_grid(trial % 2 ? FactorKind::Cycle : FactorKind::Path, 3 + trial % 3,
                              trial % 3 ? FactorKind::Cycle : FactorKind::Path, 3 + trial % 5);
    const Broadcast f = testing::random_broadcast(g, rng, 0.2, 0.1);
    const Broadcast h = testing::random_broadcast(g, rng, 0.2, 0.1);
    const Broadcast zero(g);
    EXPECT_EQ(combine(f, zero), f);
    EXPECT_EQ(combine(f, h), combine(h, f));
    EXPECT_EQ(combine(f, f), f);
    EXPECT_EQ(subtract(f, zero), f);
    EXPECT_TRUE(subtract(f, f).is_zero());
    // f = (f minus h) plus f restricted to h's support.
    EXPECT_EQ(combine(subtract(f, h), induce(f, h.support())), f);
    EXPECT_EQ(induce(f, g.all_vertices()), f);
    EXPECT_LE(combine(f, h).cost(), f.cost() + h.cost());
    EXPECT_FALSE(subtract(f, h).support().intersects(h.support()));
  }
}

TEST(BroadcastAlgebra, RangeUnionLaw) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Grid g = build_grid(FactorKind::Cycle, 3 + trial % 4, FactorKind::Path, 2 + trial % 7);
    const Broadcast f = testing::random_broadcast(g, rng, 0.15, 0.1);
    const Broadcast h = testing::random_broadcast(g, rng, 0.15, 0.1);
    EXPECT_EQ(range_of(combine(f, h)), range_of(f) | range_of(h));
    VertexSet by_hand;
    f.support().for_each([&](int v) { by_hand |= g.ball(v, f.at_index(v)); });
    EXPECT_EQ(range_of(f), by_hand);
  }
}

TEST(BroadcastAlgebra, GridMismatchThrows) {
  const Broadcast a(build_grid(FactorKind::Path, 2, FactorKind::Path, 3));
  const Broadcast b(build_grid(FactorKind::Path, 3, FactorKind::Path, 2));
  EXPECT_THROW((void)combine(a, b), std::invalid_argument);
  EXPECT_THROW((void)subtract(a, b), std::invalid_argument);
}

}  // namespace
}  // namespace bdcert
