#include "bdcert/solver.hpp"

#include <algorithm>
#include <climits>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

namespace bdcert {

namespace {

// lcm(1..13); a radius-2 ball never holds more than 13 vertices.
constexpr std::int64_t kScale = 360360;
constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

int candidate_vertex(int c) { return c >> 1; }
int candidate_strength(int c) { return (c & 1) + 1; }

class Search {
 public:
  Search(const BallTable& balls, const std::vector<std::vector<int>>& covering, int min_candidate)
      : balls_(balls),
        covering_(covering),
        min_candidate_(min_candidate),
        candidate_count_(2 * balls.grid().vertex_count()) {}

  bool decide(const VertexSet& targets, int budget) {
    path_.clear();
    if (budget < 0) return false;
    return dfs(targets, budget, 0);
  }

  [[nodiscard]] const std::vector<Move>& path() const { return path_; }

 private:
  const VertexSet& ball(int c) const {
    return balls_.ball(candidate_vertex(c), candidate_strength(c));
  }

  void remember_failure(const VertexSet& open, int budget) {
    if (failed_.size() >= kMemoLimit) failed_.clear();
    auto [it, inserted] = failed_.try_emplace(open, budget);
    if (!inserted) it->second = std::max(it->second, budget);
  }

  bool dfs(const VertexSet& open, int budget, std::size_t depth) {
    if (open.empty()) return true;
    if (budget <= 0) return false;
    if (auto it = failed_.find(open); it != failed_.end() && it->second >= budget) return false;

    if (coverage_.size() <= depth) coverage_.resize(depth + 1);
    std::vector<int>& cov = coverage_[depth];
    cov.assign(candidate_count_, -1);

    const std::int64_t limit = static_cast<std::int64_t>(budget) * kScale;
    std::int64_t bound = 0;
    int pick = -1;
    std::int64_t pick_ratio = -1;
    int pick_options = INT_MAX;
    bool stuck = false;
    open.for_each([&](int u) {
      if (stuck) return;
      std::int64_t best = INT64_MAX;
      int options = 0;
      for (int c : covering_[u]) {
        if (c < min_candidate_) continue;
        if (cov[c] < 0) cov[c] = ball(c).intersection_size(open);
        best = std::min(best, candidate_strength(c) * kScale / cov[c]);
        ++options;
      }
      if (options == 0) {
        stuck = true;
        return;
      }
      bound += best;
      if (bound > limit) {
        stuck = true;
        return;
      }
      if (best > pick_ratio || (best == pick_ratio && options < pick_options)) {
        pick = u;
        pick_ratio = best;
        pick_options = options;
      }
    });
    if (stuck) {
      remember_failure(open, budget);
      return false;
    }

    struct Branch {
      int candidate;
      int cost;
      int gain;
      VertexSet covered;
    };
    std::vector<Branch> branches;
    for (int c : covering_[pick]) {
      if (c < min_candidate_ || candidate_strength(c) > budget) continue;
      branches.push_back({c, candidate_strength(c), cov[c], ball(c) & open});
    }
    std::vector<Branch> kept;
    for (const Branch& a : branches) {
      bool dominated = false;
      for (const Branch& b : branches) {
        if (&a == &b || b.cost > a.cost || !a.covered.is_subset_of(b.covered)) continue;
        if (b.cost < a.cost || !(a.covered == b.covered) || b.candidate < a.candidate) {
          dominated = true;
          break;
        }
      }
      if (!dominated) kept.push_back(a);
    }
    std::sort(kept.begin(), kept.end(), [](const Branch& x, const Branch& y) {
      const long lhs = static_cast<long>(x.gain) * y.cost;
      const long rhs = static_cast<long>(y.gain) * x.cost;
      if (lhs != rhs) return lhs > rhs;
      return x.candidate < y.candidate;
    });

    for (const Branch& br : kept) {
      if (dfs(open - br.covered, budget - br.cost, depth + 1)) {
        path_.push_back({candidate_vertex(br.candidate), br.cost});
        return true;
      }
    }
    remember_failure(open, budget);
    return false;
  }

  const BallTable& balls_;
  const std::vector<std::vector<int>>& covering_;
  int min_candidate_;
  int candidate_count_;
  std::unordered_map<VertexSet, int, VertexSetHash> failed_;
  std::vector<std::vector<int>> coverage_;
  std::vector<Move> path_;
};

}  // namespace

CoverSolver::CoverSolver(const Grid& grid) : CoverSolver(std::make_shared<BallTable>(grid)) {}

CoverSolver::CoverSolver(std::shared_ptr<const BallTable> balls) : balls_(std::move(balls)) {
  const Grid& g = balls_->grid();
  covering_.resize(g.vertex_count());
  for (int v = 0; v < g.vertex_count(); ++v)
    for (int s = 1; s <= 2; ++s)
      balls_->ball(v, s).for_each([&](int u) { covering_[u].push_back(2 * v + s - 1); });
}

bool CoverSolver::has_cover(const VertexSet& targets, int budget) const {
  if (budget < 0) return false;
  if (targets.empty()) return true;
  Search search(*balls_, covering_, 0);
  return search.decide(targets, budget);
}

std::optional<std::vector<Move>> CoverSolver::find_cover(const VertexSet& targets,
                                                         int budget) const {
  if (budget < 0) return std::nullopt;
  Search search(*balls_, covering_, 0);
  if (!search.decide(targets, budget)) return std::nullopt;
  std::vector<Move> moves = search.path();
  std::sort(moves.begin(), moves.end());
  return moves;
}

int CoverSolver::min_cost(const VertexSet& targets) const {
  Search search(*balls_, covering_, 0);
  for (int b = 0;; ++b)
    if (search.decide(targets, b)) return b;
}

CoverSolution CoverSolver::solve(const VertexSet& targets, std::optional<int> budget) const {
  CoverSolution out;
  if (budget && *budget < 0) return out;
  const int limit = budget.value_or(targets.size());
  int optimum = -1;
  {
    Search search(*balls_, covering_, 0);
    for (int b = 0; b <= limit; ++b) {
      if (search.decide(targets, b)) {
        optimum = b;
        break;
      }
    }
  }
  if (optimum < 0) return out;
  out.optimal_cost = optimum;

  // Build the lexicographically least optimal support one element at a time:
  // the next element is the smallest candidate that still extends to an
  // optimal cover using only later candidates.
  Broadcast witness(grid());
  VertexSet open = targets;
  int remaining = optimum;
  int lowest = 0;
  const int candidates = 2 * grid().vertex_count();
  while (!open.empty()) {
    bool placed = false;
    for (int c = lowest; c < candidates && !placed; ++c) {
      const int strength = candidate_strength(c);
      const VertexSet& b = balls_->ball(candidate_vertex(c), strength);
      if (strength > remaining || !b.intersects(open)) continue;
      const int next = (candidate_vertex(c) + 1) * 2;
      const VertexSet rest = open - b;
      bool ok = rest.empty();
      if (!ok) {
        Search search(*balls_, covering_, next);
        ok = search.decide(rest, remaining - strength);
      }
      if (ok) {
        witness.set_index(candidate_vertex(c), strength);
        open = rest;
        remaining -= strength;
        lowest = next;
        placed = true;
      }
    }
    if (!placed) throw std::logic_error("lexicographic witness reconstruction failed");
  }
  out.witness = std::move(witness);
  return out;
}

CoverSolution min_cost_cover(const Grid& grid, const VertexSet& targets,
                             std::optional<int> budget) {
  return CoverSolver(grid).solve(targets, budget);
}

bool has_broadcast(const Grid& grid, const VertexSet& targets, int budget) {
  if (budget < 0) return false;
  if (targets.empty()) return true;
  return CoverSolver(grid).has_cover(targets, budget);
}

int gamma2(const Grid& grid) { return CoverSolver(grid).min_cost(grid.all_vertices()); }

int brute_force_gamma2(const Grid& grid) {
  const int n = grid.vertex_count();
  if (n > 14) throw std::invalid_argument("brute force limited to grids with at most 14 vertices");
  const BallTable balls(grid);
  const VertexSet all = grid.all_vertices();
  std::vector<std::uint8_t> strength(n, 0);
  int best = n;
  int cost = 0;
  while (true) {
    int i = 0;
    while (i < n && strength[i] == 2) {
      strength[i] = 0;
      cost -= 2;
      ++i;
    }
    if (i == n) break;
    ++strength[i];
    ++cost;
    if (cost < best && balls.range(strength) == all) best = cost;
  }
  return best;
}

}  // namespace bdcert
