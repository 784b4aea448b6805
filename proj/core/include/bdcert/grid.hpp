#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "bdcert/vertex_set.hpp"

namespace bdcert {

enum class FactorKind : std::uint8_t { Path, Cycle };

[[nodiscard]] std::string to_string(FactorKind kind);
// Accepts "path"/"cycle" (also "P"/"C"); throws std::invalid_argument.
[[nodiscard]] FactorKind parse_factor_kind(const std::string& text);

// 1-based (row, column) address.
struct Vertex {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

// Cartesian product of a row factor (length m) and a column factor (length n).
// Vertex (i, j) sits in row i and column j; indices are row-major.
class Grid {
 public:
  Grid() = default;

  [[nodiscard]] FactorKind row_kind() const { return row_kind_; }
  [[nodiscard]] FactorKind col_kind() const { return col_kind_; }
  [[nodiscard]] int rows() const { return rows_; }
  [[nodiscard]] int cols() const { return cols_; }
  [[nodiscard]] int vertex_count() const { return rows_ * cols_; }
  [[nodiscard]] int edge_count() const;

  [[nodiscard]] bool contains(Vertex v) const {
    return v.row >= 1 && v.row <= rows_ && v.col >= 1 && v.col <= cols_;
  }
  // Throws std::out_of_range for vertices outside the grid.
  [[nodiscard]] int index(Vertex v) const;
  [[nodiscard]] Vertex vertex(int index) const {
    return {index / cols_ + 1, index % cols_ + 1};
  }

  [[nodiscard]] int row_distance(int a, int b) const;
  [[nodiscard]] int col_distance(int a, int b) const;
  [[nodiscard]] int distance(Vertex u, Vertex v) const;
  [[nodiscard]] int distance(int u, int v) const { return distance(vertex(u), vertex(v)); }
  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const { return distance(u, v) == 1; }

  [[nodiscard]] VertexSet all_vertices() const;
  [[nodiscard]] VertexSet column(int col) const;
  [[nodiscard]] VertexSet columns(int first, int last) const;
  [[nodiscard]] VertexSet ball(int center, int radius) const;

  // Short human form such as "C3xP14".
  [[nodiscard]] std::string name() const;

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  friend Grid build_grid(FactorKind, int, FactorKind, int);

  FactorKind row_kind_ = FactorKind::Path;
  FactorKind col_kind_ = FactorKind::Path;
  int rows_ = 1;
  int cols_ = 1;
};

// Throws std::invalid_argument on non-positive sizes, cycles shorter than 3,
// or grids larger than VertexSet::kCapacity vertices.
[[nodiscard]] Grid build_grid(FactorKind row_kind, int rows, FactorKind col_kind, int cols);

// Radius-1 and radius-2 balls of every vertex, computed once per grid shape.
class BallTable {
 public:
  explicit BallTable(const Grid& grid);

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] const VertexSet& ball(int center, int radius) const {
    return balls_[radius][center];
  }
  // Vertices hearing the given strength assignment.
  [[nodiscard]] VertexSet range(const std::vector<std::uint8_t>& strengths) const;

 private:
  Grid grid_;
  std::array<std::vector<VertexSet>, 3> balls_;
};

// A 2-limited broadcast: one strength in {0, 1, 2} per vertex.
class Broadcast {
 public:
  Broadcast() = default;
  explicit Broadcast(const Grid& grid) : grid_(grid), strength_(grid.vertex_count(), 0) {}

  [[nodiscard]] const Grid& grid() const { return grid_; }
  [[nodiscard]] int at(Vertex v) const { return strength_[grid_.index(v)]; }
  [[nodiscard]] int at_index(int i) const { return strength_[i]; }
  // Throws std::invalid_argument for strengths outside {0, 1, 2}.
  void set(Vertex v, int strength);
  void set_index(int i, int strength);

  [[nodiscard]] int cost() const;
  [[nodiscard]] bool is_zero() const { return cost() == 0; }
  [[nodiscard]] VertexSet support() const;
  [[nodiscard]] const std::vector<std::uint8_t>& strengths() const { return strength_; }

  friend bool operator==(const Broadcast&, const Broadcast&) = default;

 private:
  Grid grid_;
  std::vector<std::uint8_t> strength_;
};

[[nodiscard]] VertexSet range_of(const Broadcast& f);
[[nodiscard]] bool dominates(const Broadcast& f, const VertexSet& targets);
// Pointwise maximum. Throws std::invalid_argument on grid mismatch.
[[nodiscard]] Broadcast combine(const Broadcast& f, const Broadcast& g);
// Zero wherever g transmits, f elsewhere. Throws on grid mismatch.
[[nodiscard]] Broadcast subtract(const Broadcast& f, const Broadcast& g);
// f on the members of X, zero elsewhere.
[[nodiscard]] Broadcast induce(const Broadcast& f, const VertexSet& x);

// Strength matrix, one row per line, e.g. "0 2 0\n1 0 0\n".
[[nodiscard]] std::string format_matrix(const Broadcast& f);

}  // namespace bdcert
