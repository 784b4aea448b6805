#pragma once

#include <optional>
#include <string>
#include <vector>

namespace bdcert {

// B(n) = slope * floor(n / period) + offsets[n mod period], claimed for n >= n0.
struct BoundSpec {
  int period = 1;
  int slope = 1;
  std::vector<int> offsets{0};
  int n0 = 1;

  friend bool operator==(const BoundSpec&, const BoundSpec&) = default;
};

// Throws std::invalid_argument when the spec is malformed.
void validate(const BoundSpec& b);

// Floor division is used throughout, so B is defined on every integer.
[[nodiscard]] int eval_bound(const BoundSpec& b, int n);

// m_1..m_k, where an empty entry stands for +infinity.
class MVector {
 public:
  MVector() = default;
  explicit MVector(std::vector<std::optional<int>> entries) : entries_(std::move(entries)) {}

  [[nodiscard]] int size() const { return static_cast<int>(entries_.size()); }
  // 1-based; indices past the end read as infinity.
  [[nodiscard]] std::optional<int> at(int i) const {
    if (i < 1 || i > size()) return std::nullopt;
    return entries_[i - 1];
  }
  [[nodiscard]] const std::vector<std::optional<int>>& entries() const { return entries_; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const MVector&, const MVector&) = default;

 private:
  std::vector<std::optional<int>> entries_;
};

[[nodiscard]] MVector make_mvector(const std::vector<int>& finite_entries);

// m_i = max_{n >= n0} B(n) - B(n - i). The difference is periodic in n, so one
// period starting at n0 attains the maximum.
[[nodiscard]] MVector compute_m_vector(const BoundSpec& b, int n0, int k);

// Largest cost l of a (k-8)-column block for which the averaging argument
// leaves the bound open: some n >= n0 has ceil(n*l/(k-8)) < B(n), i.e.
// n*l <= (k-8)*(B(n)-1). Exact integer arithmetic. Returns -1 if no l >= 0
// qualifies.
[[nodiscard]] int compute_t(const BoundSpec& b, int n0, int k);

}  // namespace bdcert
