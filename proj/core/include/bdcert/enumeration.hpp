#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <vector>

#include "bdcert/grid.hpp"

namespace bdcert {

// The strip H = (P_m or C_m) x P_k examined around a block of r = k - 8
// consecutive columns. Columns are c_1..c_k; the active block is c_5..c_{k-4}.
class Window {
 public:
  // Throws std::invalid_argument unless k >= 13 and the active block fits in
  // 64 cells.
  static Window make(FactorKind family, int rows, int k);

  [[nodiscard]] FactorKind family() const { return family_; }
  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int k() const { return k_; }
  [[nodiscard]] int active_width() const { return k_ - 8; }
  [[nodiscard]] int first_active() const { return 5; }
  [[nodiscard]] int last_active() const { return k_ - 4; }
  [[nodiscard]] int active_cells() const { return rows_ * active_width(); }
  [[nodiscard]] Grid grid() const { return build_grid(family_, rows_, FactorKind::Path, k_); }

  // Window-grid vertex index of active cell i (row-major over the block).
  [[nodiscard]] int cell_vertex(int cell) const {
    return (cell / active_width()) * k_ + first_active() - 1 + cell % active_width();
  }

  friend bool operator==(const Window&, const Window&) = default;

 private:
  FactorKind family_ = FactorKind::Path;
  int rows_ = 1;
  int k_ = 13;
};

// Strengths on the active block, one bit per cell in row-major order.
struct ActivePattern {
  std::uint64_t ones = 0;
  std::uint64_t twos = 0;

  [[nodiscard]] int cost() const { return std::popcount(ones) + 2 * std::popcount(twos); }
  [[nodiscard]] int at(int cell) const {
    return ((twos >> cell) & 1U) ? 2 : static_cast<int>((ones >> cell) & 1U);
  }
  friend bool operator==(const ActivePattern&, const ActivePattern&) = default;
};

// Lexicographic comparison of row-major strength sequences; -1, 0 or 1.
[[nodiscard]] int compare_sequences(const ActivePattern& a, const ActivePattern& b);

struct WindowCase {
  ActivePattern pattern;
  int cost = 0;
};

[[nodiscard]] Broadcast to_broadcast(const Window& w, const ActivePattern& p);
// Throws std::invalid_argument if f transmits outside the active block.
[[nodiscard]] ActivePattern to_pattern(const Window& w, const Broadcast& f);

// A contiguous slice of the case stream: all sequences of one cost whose first
// one or two transmitters are fixed. Slices are disjoint and, listed in
// stream order, concatenate to the full stream.
struct ChunkKey {
  int cost = 0;
  int first_cell = -1;
  int first_strength = 0;
  int second_cell = -1;
  int second_strength = 0;
  friend bool operator==(const ChunkKey&, const ChunkKey&) = default;
};

// Orbit representatives under {identity, row reversal, column reversal, both}
// acting on the active block, each representative being the lexicographic
// maximum of its orbit. The stream runs by cost, then ascending sequence.
class CaseEnumerator {
 public:
  explicit CaseEnumerator(const Window& w);

  [[nodiscard]] const Window& window() const { return window_; }
  [[nodiscard]] std::vector<ChunkKey> chunks(int min_cost, int max_cost) const;
  [[nodiscard]] bool is_canonical(const ActivePattern& p) const;
  // sigma in 0..3: identity, row reversal, column reversal, both.
  [[nodiscard]] ActivePattern transform(const ActivePattern& p, int sigma) const;

  template <typename F>
  void for_each_in_chunk(const ChunkKey& key, F&& emit) const {
    ActivePattern p;
    int rest = key.cost;
    int next = cells_;
    if (key.first_cell >= 0) {
      place(p, key.first_cell, key.first_strength);
      rest -= key.first_strength;
      next = key.first_cell + 1;
      if (key.second_cell >= 0) {
        place(p, key.second_cell, key.second_strength);
        rest -= key.second_strength;
        next = key.second_cell + 1;
      }
    }
    if (rest == 0) {
      if (is_canonical(p)) emit(WindowCase{p, key.cost});
      return;
    }
    if (key.second_cell < 0) return;
    extend(p, next, rest, key.cost, emit);
  }

  template <typename F>
  void for_each(int min_cost, int max_cost, F&& emit) const {
    for (const ChunkKey& key : chunks(min_cost, max_cost)) for_each_in_chunk(key, emit);
  }

 private:
  static void place(ActivePattern& p, int cell, int strength) {
    (strength == 2 ? p.twos : p.ones) |= std::uint64_t{1} << cell;
  }
  static void lift(ActivePattern& p, int cell) {
    const std::uint64_t mask = ~(std::uint64_t{1} << cell);
    p.ones &= mask;
    p.twos &= mask;
  }

  template <typename F>
  void extend(ActivePattern& p, int cell, int rest, int cost, F& emit) const {
    if (rest == 0) {
      if (is_canonical(p)) emit(WindowCase{p, cost});
      return;
    }
    if (cell >= cells_ || rest > 2 * (cells_ - cell)) return;
    extend(p, cell + 1, rest, cost, emit);
    for (int s = 1; s <= 2 && s <= rest; ++s) {
      place(p, cell, s);
      extend(p, cell + 1, rest - s, cost, emit);
      lift(p, cell);
    }
  }

  Window window_;
  int cells_;
  std::array<std::array<std::uint8_t, 64>, 4> perm_{};
};

// Number of orbits of cost-exactly-`cost` patterns, by Burnside's lemma over
// the same four-element group.
[[nodiscard]] std::int64_t orbit_count(const Window& w, int cost);

// Local patterns that never occur in an optimal broadcast (up to rewriting).
// B, C and D pair two strength-1 vertices whose radius-1 balls both fit in
// the radius-2 ball of a hub w, so a single 2 at w replaces them.
enum class Pattern : std::uint8_t {
  A,  // strength 1 next to strength 2
  B,  // two 1s at distance 2 in a straight line, w between them
  C,  // two 1s diagonally apart, w a common neighbour
  D,  // two adjacent 1s, w one of them
};

struct PatternSite {
  Pattern pattern;
  // A: the dropped 1. B, C, D: the vertex that receives strength 2.
  int hub = -1;
  // A: the 2. B, C, D: the 1s that are cleared (D lists only the partner).
  std::vector<int> others;
};

[[nodiscard]] std::optional<PatternSite> find_pattern(const Broadcast& f, Pattern pattern);
[[nodiscard]] bool forbidden_broadcast(const Broadcast& f);
[[nodiscard]] bool is_canonical(const Window& w, const Broadcast& f);

// Applies the rewrite for a present pattern and checks it keeps cost from
// rising and range from shrinking. Throws std::invalid_argument when the
// pattern is absent.
[[nodiscard]] bool replacement_check(const Broadcast& f, Pattern pattern);
[[nodiscard]] Broadcast apply_replacement(const Broadcast& f, const PatternSite& site);

}  // namespace bdcert
