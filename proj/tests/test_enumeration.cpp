#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "bdcert/enumeration.hpp"
#include "support.hpp"

namespace bdcert {
namespace {

std::vector<Window> small_windows() {
  std::vector<Window> out;
  for (int m = 1; m <= 4; ++m) out.push_back(Window::make(FactorKind::Path, m, 13));
  for (int m = 3; m <= 4; ++m) out.push_back(Window::make(FactorKind::Cycle, m, 13));
  return out;
}

// Every pattern of cost <= max_cost on the active block.
std::vector<ActivePattern> all_patterns(const Window& w, int max_cost) {
  std::vector<ActivePattern> out;
  const int cells = w.active_cells();
  std::function<void(int, int, ActivePattern)> rec = [&](int cell, int budget, ActivePattern p) {
    if (cell == cells) {
      out.push_back(p);
      return;
    }
    rec(cell + 1, budget, p);
    for (int s = 1; s <= 2 && s <= budget; ++s) {
      ActivePattern q = p;
      (s == 1 ? q.ones : q.twos) |= std::uint64_t{1} << cell;
      rec(cell + 1, budget - s, q);
    }
  };
  rec(0, max_cost, ActivePattern{});
  return out;
}

TEST(Window, Shape) {
  const Window w = Window::make(FactorKind::Cycle, 3, 14);
  EXPECT_EQ(w.active_width(), 6);
  EXPECT_EQ(w.active_cells(), 18);
  EXPECT_EQ(w.cell_vertex(0), 4);
  EXPECT_EQ(w.cell_vertex(6), 14 + 4);
  EXPECT_THROW((void)Window::make(FactorKind::Path, 3, 12), std::invalid_argument);
  EXPECT_THROW((void)Window::make(FactorKind::Path, 9, 16), std::invalid_argument);
}

TEST(Window, PatternRoundTrip) {
  const Window w = Window::make(FactorKind::Path, 4, 13);
  std::mt19937 rng(5);
  for (int i = 0; i < 200; ++i) {
    ActivePattern p;
    for (int c = 0; c < w.active_cells(); ++c) {
      const int s = static_cast<int>(rng() % 5);
      if (s == 1) p.ones |= std::uint64_t{1} << c;
      if (s == 2) p.twos |= std::uint64_t{1} << c;
    }
    const Broadcast f = to_broadcast(w, p);
    EXPECT_EQ(f.cost(), p.cost());
    EXPECT_EQ(to_pattern(w, f), p);
  }
  Broadcast outside(w.grid());
  outside.set({1, 1}, 1);
  EXPECT_THROW((void)to_pattern(w, outside), std::invalid_argument);
}

TEST(Enumeration, OrbitCountMatchesEnumeration) {
  for (const Window& w : small_windows()) {
    const CaseEnumerator e(w);
    for (int cost = 0; cost <= 3; ++cost) {
      std::int64_t n = 0;
      e.for_each(cost, cost, [&](const WindowCase&) { ++n; });
      EXPECT_EQ(n, orbit_count(w, cost)) << to_string(w.family()) << w.rows() << " cost " << cost;
    }
  }
}

TEST(Enumeration, OneCanonicalPerOrbit) {
  for (const Window& w : small_windows()) {
    const CaseEnumerator e(w);
    std::set<std::pair<std::uint64_t, std::uint64_t>> expected;
    for (const ActivePattern& p : all_patterns(w, 3)) {
      ActivePattern best = p;
      for (int sigma = 1; sigma < 4; ++sigma) {
        const ActivePattern q = e.transform(p, sigma);
        if (compare_sequences(q, best) > 0) best = q;
      }
      EXPECT_EQ(e.is_canonical(p), best == p);
      if (best == p) expected.insert({p.ones, p.twos});
    }
    std::set<std::pair<std::uint64_t, std::uint64_t>> emitted;
    e.for_each(0, 3, [&](const WindowCase& c) {
      EXPECT_EQ(c.cost, c.pattern.cost());
      EXPECT_TRUE(emitted.insert({c.pattern.ones, c.pattern.twos}).second);
    });
    EXPECT_EQ(emitted, expected);
  }
}

TEST(Enumeration, TransformsFormKleinGroup) {
  const Window w = Window::make(FactorKind::Cycle, 4, 14);
  const CaseEnumerator e(w);
  std::mt19937 rng(9);
  for (int i = 0; i < 100; ++i) {
    ActivePattern p{rng() & ((std::uint64_t{1} << w.active_cells()) - 1), 0};
    p.twos = rng() & ~p.ones & ((std::uint64_t{1} << w.active_cells()) - 1);
    for (int s = 0; s < 4; ++s) EXPECT_EQ(e.transform(e.transform(p, s), s), p);
    EXPECT_EQ(e.transform(e.transform(p, 1), 2), e.transform(p, 3));
    EXPECT_EQ(e.transform(p, 0), p);
  }
}

TEST(Enumeration, StreamOrderAndChunkCover) {
  const Window w = Window::make(FactorKind::Cycle, 3, 14);
  const CaseEnumerator e(w);
  std::vector<WindowCase> stream;
  e.for_each(2, 3, [&](const WindowCase& c) { stream.push_back(c); });
  ASSERT_EQ(stream.size(), 54U + 302U);
  for (std::size_t i = 1; i < stream.size(); ++i) {
    if (stream[i].cost != stream[i - 1].cost) {
      EXPECT_GT(stream[i].cost, stream[i - 1].cost);
    } else {
      EXPECT_LT(compare_sequences(stream[i - 1].pattern, stream[i].pattern), 0);
    }
  }
  std::size_t at = 0;
  for (const ChunkKey& key : e.chunks(2, 3))
    e.for_each_in_chunk(key, [&](const WindowCase& c) {
      ASSERT_LT(at, stream.size());
      EXPECT_EQ(c.pattern, stream[at++].pattern);
    });
  EXPECT_EQ(at, stream.size());
}

TEST(Enumeration, ReferenceCaseCounts) {
  const CaseEnumerator c3(Window::make(FactorKind::Cycle, 3, 14));
  EXPECT_EQ(orbit_count(c3.window(), 2), 54);
  EXPECT_EQ(orbit_count(c3.window(), 3), 302);
  const Window c5 = Window::make(FactorKind::Cycle, 5, 16);
  EXPECT_EQ(orbit_count(c5, 7), 12162548);
  const Window p5 = Window::make(FactorKind::Path, 5, 19);
  EXPECT_EQ(orbit_count(p5, 11), 179128860188);
}

TEST(Patterns, Detection) {
  const Grid g = build_grid(FactorKind::Path, 5, FactorKind::Path, 6);
  Broadcast a(g);
  a.set({2, 2}, 1);
  a.set({2, 3}, 2);
  EXPECT_TRUE(find_pattern(a, Pattern::A).has_value());
  EXPECT_FALSE(find_pattern(a, Pattern::D).has_value());

  Broadcast b(g);
  b.set({3, 1}, 1);
  b.set({3, 3}, 1);
  const auto site = find_pattern(b, Pattern::B);
  ASSERT_TRUE(site.has_value());
  EXPECT_EQ(site->hub, g.index({3, 2}));
  EXPECT_FALSE(find_pattern(b, Pattern::C).has_value());

  Broadcast c(g);
  c.set({2, 2}, 1);
  c.set({3, 3}, 1);
  EXPECT_TRUE(find_pattern(c, Pattern::C).has_value());
  EXPECT_FALSE(find_pattern(c, Pattern::B).has_value());

  Broadcast d(g);
  d.set({4, 4}, 1);
  d.set({4, 5}, 1);
  EXPECT_TRUE(find_pattern(d, Pattern::D).has_value());

  Broadcast clean(g);
  clean.set({1, 1}, 1);
  clean.set({4, 4}, 1);
  clean.set({1, 5}, 2);
  EXPECT_FALSE(forbidden_broadcast(clean));
  EXPECT_THROW((void)replacement_check(clean, Pattern::A), std::invalid_argument);
}

TEST(Patterns, ReplacementCheckOnRandomPlacements) {
  std::mt19937 rng(2024);
  int placements = 0;
  int checks = 0;
  while (placements < 1000) {
    const bool cyc = rng() % 2;
    const int m = cyc ? 3 + static_cast<int>(rng() % 4) : 2 + static_cast<int>(rng() % 4);
    const Grid g = build_grid(cyc ? FactorKind::Cycle : FactorKind::Path, m,
                              rng() % 2 ? FactorKind::Cycle : FactorKind::Path,
                              4 + static_cast<int>(rng() % 6));
    Broadcast f = testing::random_broadcast(g, rng, 0.05, 0.03);
    const int v = static_cast<int>(rng() % g.vertex_count());
    const int want = 1 + static_cast<int>(rng() % 2);  // distance of the partner
    std::vector<int> partners;
    for (int u = 0; u < g.vertex_count(); ++u)
      if (g.distance(u, v) == want) partners.push_back(u);
    if (partners.empty()) continue;
    const int u = partners[rng() % partners.size()];
    f.set_index(v, 1);
    f.set_index(u, want == 1 && rng() % 2 ? 2 : 1);
    ++placements;
    bool any = false;
    for (Pattern p : {Pattern::A, Pattern::B, Pattern::C, Pattern::D}) {
      if (!find_pattern(f, p)) continue;
      any = true;
      ++checks;
      ASSERT_TRUE(replacement_check(f, p)) << g.name() << '\n' << format_matrix(f);
    }
    ASSERT_TRUE(any);
    ASSERT_TRUE(forbidden_broadcast(f));
  }
  EXPECT_GE(checks, 1000);
}

}  // namespace
}  // namespace bdcert
