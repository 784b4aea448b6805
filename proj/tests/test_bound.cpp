#include <gtest/gtest.h>

#include <functional>

#include "bdcert/bound.hpp"
#include "bdcert/certifier.hpp"
#include "bdcert/presets.hpp"

namespace bdcert {
namespace {

// Lower-bound formulas for each preset.
const std::map<std::string, std::function<int(int)>>& closed_forms() {
  static const std::map<std::string, std::function<int(int)>> forms = {
      {"C3", [](int n) { return (2 * n + 2) / 3; }},
      {"C4",
       [](int n) {
         const int r = n % 6;
         const int c = r == 0 ? 0 : (r <= 2 ? 2 : (r <= 4 ? 3 : 4));
         return 4 * (n / 6) + c;
       }},
      {"C5", [](int n) { return n; }},
      {"C6", [](int n) { return n + (n % 4 == 0 ? 0 : 1); }},
      {"P4C",
       [](int n) {
         static const int c[] = {0, 2, 2, 3, 4, 5, 5, 6, 7, 8};
         return 8 * (n / 10) + c[n % 10];
       }},
      {"P5C", [](int n) { return n + n % 2; }},
  };
  return forms;
}

TEST(Bound, PresetsMatchTheoremStatements) {
  for (const auto& p : theorem_presets()) {
    const auto& form = closed_forms().at(p.id);
    for (int n = 3; n <= 200; ++n) EXPECT_EQ(eval_bound(p.bound, n), form(n)) << p.id << " n=" << n;
  }
}

TEST(Bound, Validation) {
  EXPECT_NO_THROW(validate(BoundSpec{3, 2, {0, 1, 2}, 17}));
  EXPECT_THROW(validate(BoundSpec{0, 2, {}, 17}), std::invalid_argument);
  EXPECT_THROW(validate(BoundSpec{3, 2, {0, 1}, 17}), std::invalid_argument);
}

TEST(Bound, FloorDivisionBelowZero) {
  const BoundSpec b{3, 2, {0, 1, 2}, 17};
  EXPECT_EQ(eval_bound(b, -1), -2 + 2);
  EXPECT_EQ(eval_bound(b, 0), 0);
}

TEST(MVector, AttainsButNeverViolatesDefinition) {
  for (const auto& p : theorem_presets()) {
    const MVector m = compute_m_vector(p.bound, p.bound.n0, p.k);
    ASSERT_EQ(m.size(), p.k);
    const int n0 = p.bound.n0;
    for (int i = 1; i <= p.k; ++i) {
      int best = -1000000;
      for (int n = n0; n <= n0 + 10 * p.bound.period; ++n)
        best = std::max(best, eval_bound(p.bound, n) - eval_bound(p.bound, n - i));
      ASSERT_TRUE(m.at(i).has_value());
      EXPECT_EQ(*m.at(i), best) << p.id << " i=" << i;
    }
  }
}

TEST(MVector, MatchesPrintedVectors) {
  for (const auto& p : theorem_presets())
    EXPECT_EQ(compute_m_vector(p.bound, p.bound.n0, p.k), p.mvec) << p.id;
}

TEST(MVector, InfinityAndFormatting) {
  const MVector m({1, std::nullopt, 3});
  EXPECT_EQ(m.at(2), std::nullopt);
  EXPECT_EQ(m.at(4), std::nullopt);
  EXPECT_EQ(m.at(0), std::nullopt);
  EXPECT_EQ(m.to_string(), "(1, inf, 3)");
}

TEST(ComputeT, KnownValues) {
  const std::map<std::string, int> want = {{"C3", 3}, {"C4", 4}, {"C5", 7},
                                           {"C6", 8}, {"P4C", 8}, {"P5C", 11}};
  for (const auto& p : theorem_presets())
    EXPECT_EQ(compute_t(p.bound, p.bound.n0, p.k), want.at(p.id)) << p.id;
  EXPECT_THROW((void)compute_t(BoundSpec{}, 15, 12), std::invalid_argument);
}

TEST(DerivedParams, AllSixTheorems) {
  for (const auto& p : theorem_presets()) {
    const ProofParams d = derive_params(p.window(), p.bound);
    EXPECT_EQ(d.s, p.s) << p.id;
    EXPECT_EQ(d.t, p.t) << p.id;
    EXPECT_EQ(d.mvec, p.mvec) << p.id;
  }
}

}  // namespace
}  // namespace bdcert
