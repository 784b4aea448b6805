#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bdcert/certifier.hpp"

namespace bdcert {

// Reference per-cost step counts for one theorem, costs s..t.
struct GoldenTable {
  int s = 0;
  std::vector<StepCounts> rows;

  [[nodiscard]] int t() const { return s + static_cast<int>(rows.size()) - 1; }
  [[nodiscard]] std::int64_t get(int cost, Step step) const {
    return rows.at(cost - s)[static_cast<int>(step)];
  }
};

struct TheoremPreset {
  std::string id;  // C3, C4, C5, C6, P4C, P5C
  std::string description;
  FactorKind family = FactorKind::Cycle;
  int rows = 3;
  int k = 14;
  BoundSpec bound;
  int s = 0;
  int t = 0;
  MVector mvec;  // reference copy, checked against compute_m_vector
  GoldenTable golden;

  [[nodiscard]] Window window() const { return Window::make(family, rows, k); }
  [[nodiscard]] ProofParams params() const { return {window(), bound, s, t, mvec}; }
};

[[nodiscard]] const std::vector<TheoremPreset>& theorem_presets();
// Throws std::invalid_argument for unknown ids.
[[nodiscard]] const TheoremPreset& theorem_preset(const std::string& id);
[[nodiscard]] std::vector<std::string> theorem_ids();

}  // namespace bdcert
