#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "bdcert/certifier.hpp"
#include "bdcert/presets.hpp"

namespace bdcert {

// Table layout: header "step,cost_s,...,cost_t", one row per step in table
// order. Rows that are zero in every cost are left out unless `full`. The
// TotalCases row is always written.
[[nodiscard]] std::string to_csv(const CaseReport& report, bool full = false);

// Run facts that go into the JSON report next to the counts.
struct RunInfo {
  std::string theorem;  // empty for ad hoc configs
  std::string config_hash;
  bool completed = true;
  std::int64_t chunks_done = 0;
  std::int64_t chunks_total = 0;
  int workers = 1;
  double seconds = 0.0;
};

// The derived block always carries s, t and the m-vector recomputed from the
// window and bound, so the report can be checked on its own. Everything that
// may differ between equivalent runs sits under "run".
[[nodiscard]] std::string to_json(const ProofParams& used, const CaseReport& report,
                                  const RunInfo& info);

struct CellDiff {
  int cost = 0;
  Step step = Step::TotalCases;
  std::int64_t expected = 0;
  std::int64_t actual = 0;
  [[nodiscard]] bool pass() const { return expected == actual; }
};

// Every cell of the golden table, in table order (step-major).
[[nodiscard]] std::vector<CellDiff> diff_golden(const CaseReport& report, const GoldenTable& golden);

// Surviving case as a strength matrix on the window.
[[nodiscard]] std::string format_survivor(const Window& w, const Survivor& s);

}  // namespace bdcert
