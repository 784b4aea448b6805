#include "bdcert/enumeration.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace bdcert {

Window Window::make(FactorKind family, int rows, int k) {
  if (k < 13) throw std::invalid_argument("window needs k >= 13 columns");
  if (rows < 1 || (family == FactorKind::Cycle && rows < 3))
    throw std::invalid_argument("invalid window row count");
  if (rows * (k - 8) > 64) throw std::invalid_argument("active block exceeds 64 cells");
  Window w;
  w.family_ = family;
  w.rows_ = rows;
  w.k_ = k;
  return w;
}

int compare_sequences(const ActivePattern& a, const ActivePattern& b) {
  const std::uint64_t diff = (a.ones ^ b.ones) | (a.twos ^ b.twos);
  if (diff == 0) return 0;
  const int cell = std::countr_zero(diff);
  return a.at(cell) > b.at(cell) ? 1 : -1;
}

Broadcast to_broadcast(const Window& w, const ActivePattern& p) {
  Broadcast f(w.grid());
  for (int cell = 0; cell < w.active_cells(); ++cell)
    if (p.at(cell) > 0) f.set_index(w.cell_vertex(cell), p.at(cell));
  return f;
}

ActivePattern to_pattern(const Window& w, const Broadcast& f) {
  if (!(f.grid() == w.grid())) throw std::invalid_argument("broadcast is not on the window grid");
  ActivePattern p;
  VertexSet active;
  for (int cell = 0; cell < w.active_cells(); ++cell) {
    const int v = w.cell_vertex(cell);
    active.insert(v);
    const int s = f.at_index(v);
    if (s == 1) p.ones |= std::uint64_t{1} << cell;
    if (s == 2) p.twos |= std::uint64_t{1} << cell;
  }
  if (!f.support().is_subset_of(active))
    throw std::invalid_argument("broadcast transmits outside the active columns");
  return p;
}

CaseEnumerator::CaseEnumerator(const Window& w) : window_(w), cells_(w.active_cells()) {
  const int width = w.active_width();
  const int rows = w.rows();
  for (int cell = 0; cell < cells_; ++cell) {
    const int r = cell / width;
    const int c = cell % width;
    const int flipped_r = rows - 1 - r;
    const int flipped_c = width - 1 - c;
    perm_[0][cell] = static_cast<std::uint8_t>(cell);
    perm_[1][cell] = static_cast<std::uint8_t>(flipped_r * width + c);
    perm_[2][cell] = static_cast<std::uint8_t>(r * width + flipped_c);
    perm_[3][cell] = static_cast<std::uint8_t>(flipped_r * width + flipped_c);
  }
}

ActivePattern CaseEnumerator::transform(const ActivePattern& p, int sigma) const {
  const auto& perm = perm_[sigma];
  ActivePattern q;
  for (std::uint64_t bits = p.ones; bits != 0; bits &= bits - 1)
    q.ones |= std::uint64_t{1} << perm[std::countr_zero(bits)];
  for (std::uint64_t bits = p.twos; bits != 0; bits &= bits - 1)
    q.twos |= std::uint64_t{1} << perm[std::countr_zero(bits)];
  return q;
}

bool CaseEnumerator::is_canonical(const ActivePattern& p) const {
  for (int sigma = 1; sigma < 4; ++sigma)
    if (compare_sequences(p, transform(p, sigma)) < 0) return false;
  return true;
}

std::vector<ChunkKey> CaseEnumerator::chunks(int min_cost, int max_cost) const {
  std::vector<ChunkKey> out;
  for (int cost = std::max(min_cost, 0); cost <= max_cost; ++cost) {
    if (cost > 2 * cells_) continue;
    if (cost == 0) {
      out.push_back({0, -1, 0, -1, 0});
      continue;
    }
    // A later first transmitter means a smaller sequence.
    for (int p1 = cells_ - 1; p1 >= 0; --p1) {
      for (int s1 = 1; s1 <= 2 && s1 <= cost; ++s1) {
        const int after_first = cost - s1;
        if (after_first > 2 * (cells_ - 1 - p1)) continue;
        if (after_first == 0) {
          out.push_back({cost, p1, s1, -1, 0});
          continue;
        }
        for (int p2 = cells_ - 1; p2 > p1; --p2) {
          for (int s2 = 1; s2 <= 2 && s2 <= after_first; ++s2) {
            if (after_first - s2 > 2 * (cells_ - 1 - p2)) continue;
            out.push_back({cost, p1, s1, p2, s2});
          }
        }
      }
    }
  }
  return out;
}

bool is_canonical(const Window& w, const Broadcast& f) {
  return CaseEnumerator(w).is_canonical(to_pattern(w, f));
}

std::int64_t orbit_count(const Window& w, int cost) {
  if (cost < 0) return 0;
  const CaseEnumerator e(w);
  const int cells = w.active_cells();
  std::int64_t total = 0;
  for (int sigma = 0; sigma < 4; ++sigma) {
    // Cells split into cycles of sigma; a fixed pattern is constant on each
    // cycle, so count ways with a knapsack over cycle lengths.
    ActivePattern probe;
    std::vector<int> lengths;
    std::vector<bool> seen(cells, false);
    for (int cell = 0; cell < cells; ++cell) {
      if (seen[cell]) continue;
      int len = 0;
      int cur = cell;
      while (!seen[cur]) {
        seen[cur] = true;
        ++len;
        probe.ones = std::uint64_t{1} << cur;
        cur = std::countr_zero(e.transform(probe, sigma).ones);
      }
      lengths.push_back(len);
    }
    std::vector<std::int64_t> ways(cost + 1, 0);
    ways[0] = 1;
    for (int len : lengths) {
      std::vector<std::int64_t> next(cost + 1, 0);
      for (int c = 0; c <= cost; ++c) {
        if (ways[c] == 0) continue;
        for (int s = 0; s <= 2; ++s)
          if (c + s * len <= cost) next[c + s * len] += ways[c];
      }
      ways = std::move(next);
    }
    total += ways[cost];
  }
  return total / 4;
}

namespace {

// Neighbor of v one step along the row or column factor, or -1.
int step(const Grid& g, int v, int dr, int dc) {
  Vertex p = g.vertex(v);
  int r = p.row + dr;
  int c = p.col + dc;
  if (r < 1 || r > g.rows()) {
    if (g.row_kind() != FactorKind::Cycle) return -1;
    r = (r + g.rows() - 1) % g.rows() + 1;
  }
  if (c < 1 || c > g.cols()) {
    if (g.col_kind() != FactorKind::Cycle) return -1;
    c = (c + g.cols() - 1) % g.cols() + 1;
  }
  const int u = g.index({r, c});
  return u == v ? -1 : u;
}

std::vector<int> neighbors(const Grid& g, int v) {
  std::vector<int> out;
  for (auto [dr, dc] : {std::pair{-1, 0}, std::pair{1, 0}, std::pair{0, -1}, std::pair{0, 1}}) {
    const int u = step(g, v, dr, dc);
    if (u >= 0 && std::find(out.begin(), out.end(), u) == out.end()) out.push_back(u);
  }
  return out;
}

}  // namespace

std::optional<PatternSite> find_pattern(const Broadcast& f, Pattern pattern) {
  const Grid& g = f.grid();
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (f.at_index(v) != 1) continue;
    switch (pattern) {
      case Pattern::A:
        for (int u : neighbors(g, v))
          if (f.at_index(u) == 2) return PatternSite{pattern, v, {u}};
        break;
      case Pattern::D:
        for (int u : neighbors(g, v))
          if (f.at_index(u) == 1) return PatternSite{pattern, v, {u}};
        break;
      case Pattern::B:
        // v and a 1 two steps away in a straight line; the hub sits between.
        for (auto [dr, dc] : {std::pair{1, 0}, std::pair{0, 1}, std::pair{-1, 0}, std::pair{0, -1}}) {
          const int mid = step(g, v, dr, dc);
          const int far = mid < 0 ? -1 : step(g, mid, dr, dc);
          if (far >= 0 && far != v && g.distance(v, far) == 2 && f.at_index(far) == 1)
            return PatternSite{pattern, mid, {v, far}};
        }
        break;
      case Pattern::C:
        // v and a diagonal 1; the hub is a common neighbour.
        for (int dr : {-1, 1}) {
          for (int dc : {-1, 1}) {
            const int mid = step(g, v, dr, 0);
            const int far = mid < 0 ? -1 : step(g, mid, 0, dc);
            if (far >= 0 && far != v && g.distance(v, far) == 2 && f.at_index(far) == 1)
              return PatternSite{pattern, mid, {v, far}};
          }
        }
        break;
    }
  }
  return std::nullopt;
}

bool forbidden_broadcast(const Broadcast& f) {
  for (Pattern p : {Pattern::A, Pattern::B, Pattern::C, Pattern::D})
    if (find_pattern(f, p)) return true;
  return false;
}

Broadcast apply_replacement(const Broadcast& f, const PatternSite& site) {
  Broadcast out = f;
  if (site.pattern == Pattern::A) {
    out.set_index(site.hub, 0);
    return out;
  }
  for (int u : site.others) out.set_index(u, 0);
  out.set_index(site.hub, 2);
  return out;
}

bool replacement_check(const Broadcast& f, Pattern pattern) {
  const auto site = find_pattern(f, pattern);
  if (!site) throw std::invalid_argument("pattern not present in broadcast");
  const Broadcast rewritten = apply_replacement(f, *site);
  return rewritten.cost() <= f.cost() && range_of(f).is_subset_of(range_of(rewritten));
}

}  // namespace bdcert
