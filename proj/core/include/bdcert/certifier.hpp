#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bdcert/bound.hpp"
#include "bdcert/enumeration.hpp"
#include "bdcert/solver.hpp"

namespace bdcert {

// Rows of a case table, in the order the tables print them.
enum class Step : std::uint8_t {
  TotalCases,
  DoesNotDominate,
  ForbiddenBroadcast,
  HasBroadcast,
  InductiveArgument,
  NecessaryHasBroadcast,
  NecessaryInductiveArgument,
  SubcasesHasBroadcast,
  SubcasesInductiveArgument,
};
inline constexpr int kStepCount = 9;

[[nodiscard]] std::string_view step_name(Step step);
// Throws std::invalid_argument for unknown names.
[[nodiscard]] Step parse_step(std::string_view name);

using StepCounts = std::array<std::int64_t, kStepCount>;

struct Survivor {
  int cost = 0;
  ActivePattern pattern;
  friend bool operator==(const Survivor&, const Survivor&) = default;
};

// Per-cost step counts for costs s..t.
class CaseReport {
 public:
  CaseReport() = default;
  CaseReport(int s, int t);

  [[nodiscard]] int s() const { return s_; }
  [[nodiscard]] int t() const { return t_; }
  [[nodiscard]] bool has_cost(int cost) const { return cost >= s_ && cost <= t_; }
  [[nodiscard]] std::int64_t get(int cost, Step step) const;
  void add(int cost, Step step, std::int64_t n = 1);
  [[nodiscard]] const StepCounts& row(int cost) const { return rows_.at(cost - s_); }

  // Adds counts cost by cost; ranges must agree.
  CaseReport& operator+=(const CaseReport& other);

  bool verdict = true;
  std::optional<Survivor> survivor;

  friend bool operator==(const CaseReport&, const CaseReport&) = default;

 private:
  int s_ = 0;
  int t_ = -1;
  std::vector<StepCounts> rows_;
};

struct ProofParams {
  Window window;
  BoundSpec bound;
  int s = 0;
  int t = -1;
  MVector mvec;
};

// gamma2 of the middle k-12 columns, (family)_m x P_{k-12}.
[[nodiscard]] int compute_s(const Window& w);
// Derives s, t and the m-vector from the window and the bound.
[[nodiscard]] ProofParams derive_params(const Window& w, const BoundSpec& b);

// Columns of the window are deleted and the rest closed up in order.
struct Splice {
  Grid grid;
  // new_column[c] for original column c (1-based), 0 when deleted.
  std::vector<int> new_column;
};

// Throws std::invalid_argument when S removes every column or names a
// column outside 1..k.
[[nodiscard]] Splice splice_columns(const Window& w, const std::vector<int>& deleted);

// Window vertices that keep their column, renumbered on the spliced grid.
[[nodiscard]] VertexSet project(const Window& w, const Splice& s, const VertexSet& r);

// How a single case was settled.
struct CaseOutcome {
  Step step = Step::TotalCases;  // TotalCases means unresolved
  std::int64_t subcases_has = 0;
  std::int64_t subcases_inductive = 0;
  [[nodiscard]] bool resolved() const { return step != Step::TotalCases; }
};

// All tests of the elimination battery for one window and m-vector. The
// heavy state (ball tables, strip solvers) is shared, so copies are cheap and
// each worker thread should hold its own copy.
class Certifier {
 public:
  Certifier(const Window& w, MVector mvec);

  [[nodiscard]] const Window& window() const { return window_; }
  [[nodiscard]] const MVector& mvec() const { return mvec_; }
  [[nodiscard]] const Grid& grid() const;

  [[nodiscard]] VertexSet range(const Broadcast& f) const;
  [[nodiscard]] bool does_not_dominate(const VertexSet& range) const;
  // Patterns a-d on the window graph.
  [[nodiscard]] bool forbidden(const Broadcast& f) const;
  [[nodiscard]] bool has_broadcast(const VertexSet& targets, int budget) const;

  // Number of deleted columns that succeeded, if any.
  [[nodiscard]] std::optional<int> inductive_argument(const VertexSet& r, int x) const;

  // g plus a strength-2 transmitter at c_4 (c_{k-3}) in the row of each
  // undominated vertex of c_6 (c_{k-5}).
  [[nodiscard]] Broadcast necessary_extension(const Broadcast& g) const;

  // Extensions g'' of g' outside the active columns, after both pruning rules.
  [[nodiscard]] std::vector<Broadcast> subcases(const Broadcast& g_prime) const;

  // Runs the whole battery on g in order.
  [[nodiscard]] CaseOutcome examine(const Broadcast& g) const;
  [[nodiscard]] CaseOutcome examine(const ActivePattern& p) const;

 private:
  struct Shared;
  Window window_;
  MVector mvec_;
  std::shared_ptr<const Shared> shared_;
};

[[nodiscard]] bool does_not_dominate(const Window& w, const Broadcast& g);
[[nodiscard]] bool inductive_argument(const Window& w, const VertexSet& r, int x,
                                      const MVector& mvec);

enum class NecessaryResult : std::uint8_t { HasBroadcast, Inductive, Neither };
[[nodiscard]] NecessaryResult necessary_broadcast(const Window& w, const Broadcast& g,
                                                  const MVector& mvec);

struct SubcaseTally {
  bool resolved = true;
  std::int64_t has = 0;
  std::int64_t inductive = 0;
};
[[nodiscard]] SubcaseTally all_subcases(const Window& w, const Broadcast& g, const MVector& mvec);

// Single-threaded reference run of the whole proof; stops at the first
// surviving case.
[[nodiscard]] CaseReport proved_lower_bound(const ProofParams& params);

// Restricts f on G_{m,n} to the columns outside S and moves each deleted
// transmitter to the nearest surviving vertex of its row (lower column on
// ties), keeping the larger strength. Requires a cycle column factor and at
// least three surviving columns.
[[nodiscard]] Broadcast restrict_and_patch(const Broadcast& f, const std::vector<int>& deleted);

struct SweepRow {
  int n = 0;
  int gamma = 0;
  int bound = 0;
  bool ok = false;
};
// gamma2((row_kind)_m x (col_kind)_n) against B(n) for n in [lo, hi].
[[nodiscard]] std::vector<SweepRow> base_case_sweep(FactorKind row_kind, int m,
                                                    FactorKind col_kind, const BoundSpec& b,
                                                    int lo, int hi);

}  // namespace bdcert
