#include "bdcert/presets.hpp"

#include <stdexcept>

namespace bdcert {

namespace {

// Columns are the table columns (one per cost); rows follow Step order.
// All-zero rows are written out as zeros.
GoldenTable table(int s, std::vector<std::vector<std::int64_t>> by_step) {
  GoldenTable g;
  g.s = s;
  const std::size_t costs = by_step.front().size();
  g.rows.assign(costs, StepCounts{});
  for (int step = 0; step < kStepCount; ++step)
    for (std::size_t c = 0; c < costs; ++c) g.rows[c][step] = by_step[step][c];
  return g;
}

std::vector<TheoremPreset> build() {
  std::vector<TheoremPreset> out;

  out.push_back({"C3", "C_3 x C_n >= ceil(2n/3)", FactorKind::Cycle, 3, 14,
                 BoundSpec{3, 2, {0, 1, 2}, 17}, 2, 3,
                 make_mvector({1, 2, 2, 3, 4, 4, 5, 6, 6, 7, 8, 8, 9, 10}),
                 table(2, {{54, 302},
                           {48, 231},
                           {4, 45},
                           {0, 0},
                           {0, 12},
                           {0, 8},
                           {2, 3},
                           {0, 45},
                           {0, 63}})});

  out.push_back({"C4", "C_4 x C_n >= 4 floor(n/6) + c(n mod 6)", FactorKind::Cycle, 4, 14,
                 BoundSpec{6, 4, {0, 2, 2, 3, 3, 4}, 17}, 2, 4,
                 make_mvector({2, 2, 3, 3, 4, 4, 6, 6, 7, 7, 8, 8, 10, 10}),
                 table(2, {{84, 644, 4302},
                           {83, 610, 3770},
                           {0, 16, 378},
                           {0, 0, 0},
                           {0, 0, 98},
                           {1, 16, 33},
                           {0, 2, 20},
                           {0, 0, 2},
                           {0, 0, 30}})});

  out.push_back({"C5", "C_5 x C_n >= n", FactorKind::Cycle, 5, 16, BoundSpec{1, 1, {0}, 19}, 5,
                 7, make_mvector({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15, 16}),
                 table(5, {{264148, 1925104, 12162548},
                           {264115, 1922880, 12103722},
                           {8, 1423, 48899},
                           {0, 161, 5198},
                           {25, 632, 4696},
                           {0, 0, 0},
                           {0, 5, 27},
                           {0, 27, 0},
                           {0, 48, 30}})});

  out.push_back({"C6", "C_6 x C_n >= 4 floor(n/4) + c(n mod 4)", FactorKind::Cycle, 6, 16,
                 BoundSpec{4, 4, {0, 2, 3, 4}, 19}, 5, 8,
                 make_mvector({2, 3, 4, 4, 6, 7, 8, 8, 10, 11, 12, 12, 14, 15, 16, 16}),
                 table(5, {{635628, 5506384, 41289876, 273548430},
                           {635625, 5506080, 41277225, 273227125},
                           {0, 138, 9204, 278760},
                           {0, 21, 1368, 31477},
                           {0, 67, 1698, 10361},
                           {3, 78, 330, 563},
                           {0, 0, 39, 102},
                           {0, 0, 1262, 5914},
                           {0, 0, 78, 204}})});

  out.push_back({"P4C", "P_4 x C_n >= 8 floor(n/10) + c(n mod 10)", FactorKind::Path, 4, 18,
                 BoundSpec{10, 8, {0, 2, 2, 3, 4, 5, 5, 6, 7, 8}, 21}, 6, 8,
                 make_mvector({2, 2, 3, 4, 5, 5, 6, 7, 8, 8, 10, 10, 11, 12, 13, 13, 14, 15}),
                 table(6, {{1922800, 12154870, 67920535},
                           {1922790, 12153957, 67886561},
                           {1, 546, 27525},
                           {0, 136, 4944},
                           {7, 215, 1472},
                           {1, 8, 16},
                           {0, 6, 12},
                           {3, 8, 61},
                           {13, 28, 43}})});

  out.push_back({"P5C", "P_5 x C_n >= n + (n mod 2)", FactorKind::Path, 5, 19,
                 BoundSpec{2, 2, {0, 2}, 22}, 8, 11,
                 make_mvector({2, 2, 4, 4, 6, 6, 8, 8, 10, 10, 12, 12, 14, 14, 16, 16, 18, 18, 20}),
                 table(8, {{777158275, 5239827968, 32027967253, 179128860188},
                           {777158269, 5239826944, 32027887652, 179125748233},
                           {0, 514, 61253, 2782915},
                           {0, 213, 14112, 311874},
                           {5, 287, 4208, 17127},
                           {1, 7, 14, 21},
                           {0, 3, 12, 14},
                           {0, 0, 1, 25},
                           {0, 0, 15, 26}})});
  return out;
}

}  // namespace

const std::vector<TheoremPreset>& theorem_presets() {
  static const std::vector<TheoremPreset> presets = build();
  return presets;
}

const TheoremPreset& theorem_preset(const std::string& id) {
  for (const auto& p : theorem_presets())
    if (p.id == id) return p;
  throw std::invalid_argument("unknown theorem id: " + id);
}

std::vector<std::string> theorem_ids() {
  std::vector<std::string> ids;
  for (const auto& p : theorem_presets()) ids.push_back(p.id);
  return ids;
}

}  // namespace bdcert
