#pragma once

#include <queue>
#include <random>
#include <vector>

#include "bdcert/grid.hpp"

namespace bdcert::testing {

// Adjacency built straight from the factor definitions, independent of Grid.
inline std::vector<std::vector<int>> adjacency(FactorKind rk, int m, FactorKind ck, int n) {
  std::vector<std::vector<int>> adj(m * n);
  auto id = [n](int r, int c) { return r * n + c; };
  auto link = [&](int a, int b) {
    if (a == b) return;
    for (int x : adj[a])
      if (x == b) return;
    adj[a].push_back(b);
    adj[b].push_back(a);
  };
  for (int r = 0; r < m; ++r)
    for (int c = 0; c < n; ++c) {
      if (c + 1 < n) link(id(r, c), id(r, c + 1));
      if (r + 1 < m) link(id(r, c), id(r + 1, c));
    }
  if (ck == FactorKind::Cycle && n >= 3)
    for (int r = 0; r < m; ++r) link(id(r, n - 1), id(r, 0));
  if (rk == FactorKind::Cycle && m >= 3)
    for (int c = 0; c < n; ++c) link(id(m - 1, c), id(0, c));
  return adj;
}

inline std::vector<std::vector<int>> bfs_distances(const std::vector<std::vector<int>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<std::vector<int>> d(n, std::vector<int>(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    d[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : adj[u])
        if (d[s][v] < 0) {
          d[s][v] = d[s][u] + 1;
          q.push(v);
        }
    }
  }
  return d;
}

// Random broadcast: each vertex gets strength 1 or 2 with the given odds.
inline Broadcast random_broadcast(const Grid& g, std::mt19937& rng, double p1, double p2) {
  Broadcast f(g);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < g.vertex_count(); ++i) {
    const double x = u(rng);
    f.set_index(i, x < p2 ? 2 : (x < p2 + p1 ? 1 : 0));
  }
  return f;
}

// Adds strength-2 transmitters at undominated vertices until f dominates.
inline Broadcast make_dominating(Broadcast f, std::mt19937& rng) {
  const Grid& g = f.grid();
  for (;;) {
    const VertexSet missing = g.all_vertices() - range_of(f);
    if (missing.empty()) return f;
    std::vector<int> left;
    missing.for_each([&](int v) { left.push_back(v); });
    f.set_index(left[std::uniform_int_distribution<std::size_t>(0, left.size() - 1)(rng)], 2);
  }
}

}  // namespace bdcert::testing
