#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "bdcert/grid.hpp"

namespace bdcert {

// One transmitter of a cover: vertex index and strength in {1, 2}.
struct Move {
  int vertex = 0;
  int strength = 1;
  friend auto operator<=>(const Move&, const Move&) = default;
};

struct CoverSolution {
  // Empty when no cover fits inside the supplied budget.
  std::optional<int> optimal_cost;
  std::optional<Broadcast> witness;

  [[nodiscard]] bool feasible() const { return optimal_cost.has_value(); }
};

// Exact minimum-cost 2-limited cover of a target set.
//
// Branch and bound over (vertex, strength) balls: branch on the uncovered
// target that is most expensive to cover, drop candidate balls that are
// dominated on the remaining targets, and prune with the fractional charging
// bound  sum_u min_{B ∋ u} cost(B) / |B ∩ U|,  which no cover can beat.
// Instances are immutable and may be shared between threads; every query
// allocates its own search state.
class CoverSolver {
 public:
  explicit CoverSolver(const Grid& grid);
  explicit CoverSolver(std::shared_ptr<const BallTable> balls);

  [[nodiscard]] const Grid& grid() const { return balls_->grid(); }
  [[nodiscard]] const BallTable& balls() const { return *balls_; }

  // True iff the targets can be dominated with cost <= budget. Negative
  // budgets are satisfiable only by an empty target set, which costs 0 and
  // therefore still fails.
  [[nodiscard]] bool has_cover(const VertexSet& targets, int budget) const;
  // Some cover of cost <= budget, if any.
  [[nodiscard]] std::optional<std::vector<Move>> find_cover(const VertexSet& targets,
                                                            int budget) const;
  [[nodiscard]] int min_cost(const VertexSet& targets) const;

  // Optimum together with the cover whose sorted (row, col, strength) support
  // is lexicographically least. With a budget, reports infeasible when the
  // optimum exceeds it.
  [[nodiscard]] CoverSolution solve(const VertexSet& targets,
                                    std::optional<int> budget = std::nullopt) const;

 private:
  std::shared_ptr<const BallTable> balls_;
  // covering_[u] lists candidate ids (2 * vertex + strength - 1) whose ball holds u.
  std::vector<std::vector<int>> covering_;
};

[[nodiscard]] CoverSolution min_cost_cover(const Grid& grid, const VertexSet& targets,
                                           std::optional<int> budget = std::nullopt);
[[nodiscard]] bool has_broadcast(const Grid& grid, const VertexSet& targets, int budget);
[[nodiscard]] int gamma2(const Grid& grid);

// Exhaustive 3^(mn) enumeration; throws std::invalid_argument when m*n > 14.
[[nodiscard]] int brute_force_gamma2(const Grid& grid);

}  // namespace bdcert
