#include "bdcert/bound.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bdcert {

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

void validate(const BoundSpec& b) {
  if (b.period < 1) throw std::invalid_argument("bound period must be positive");
  if (b.slope < 1) throw std::invalid_argument("bound slope must be positive");
  if (static_cast<int>(b.offsets.size()) != b.period)
    throw std::invalid_argument("bound needs exactly one offset per residue");
  for (int c : b.offsets)
    if (c < 0) throw std::invalid_argument("bound offsets must be non-negative");
  if (b.n0 < 1) throw std::invalid_argument("bound n0 must be positive");
}

int eval_bound(const BoundSpec& b, int n) {
  const int q = floor_div(n, b.period);
  const int r = n - q * b.period;
  return b.slope * q + b.offsets[r];
}

std::string MVector::to_string() const {
  std::ostringstream os;
  os << '(';
  for (int i = 0; i < size(); ++i) {
    if (i > 0) os << ", ";
    if (entries_[i])
      os << *entries_[i];
    else
      os << "inf";
  }
  os << ')';
  return os.str();
}

MVector make_mvector(const std::vector<int>& finite_entries) {
  std::vector<std::optional<int>> e(finite_entries.begin(), finite_entries.end());
  return MVector(std::move(e));
}

MVector compute_m_vector(const BoundSpec& b, int n0, int k) {
  validate(b);
  if (k < 1) throw std::invalid_argument("k must be positive");
  std::vector<std::optional<int>> entries;
  for (int i = 1; i <= k; ++i) {
    int best = eval_bound(b, n0) - eval_bound(b, n0 - i);
    for (int n = n0 + 1; n < n0 + b.period; ++n)
      best = std::max(best, eval_bound(b, n) - eval_bound(b, n - i));
    entries.emplace_back(best);
  }
  return MVector(std::move(entries));
}

int compute_t(const BoundSpec& b, int n0, int k) {
  validate(b);
  if (k < 13) throw std::invalid_argument("k must be at least 13");
  const long width = k - 8;
  // For fixed residue, n*l - width*(B(n)-1) grows with n once l/width >=
  // slope/period, so the smallest n of each residue decides; below that ratio
  // the condition holds for all large n.
  auto open = [&](long l) {
    if (l * b.period < static_cast<long>(b.slope) * width) return true;
    for (int n = n0; n < n0 + b.period; ++n)
      if (n * l <= width * (eval_bound(b, n) - 1)) return true;
    return false;
  };
  long t = -1;
  while (open(t + 1)) ++t;
  return static_cast<int>(t);
}

}  // namespace bdcert
