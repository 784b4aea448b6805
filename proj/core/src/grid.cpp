#include "bdcert/grid.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace bdcert {

std::string to_string(FactorKind kind) {
  return kind == FactorKind::Cycle ? "cycle" : "path";
}

FactorKind parse_factor_kind(const std::string& text) {
  std::string lower;
  for (char ch : text) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(ch))));
  if (lower == "path" || lower == "p") return FactorKind::Path;
  if (lower == "cycle" || lower == "c") return FactorKind::Cycle;
  throw std::invalid_argument("unknown factor kind '" + text + "' (expected path or cycle)");
}

namespace {

int factor_distance(FactorKind kind, int length, int a, int b) {
  int d = std::abs(a - b);
  if (kind == FactorKind::Cycle) d = std::min(d, length - d);
  return d;
}

int factor_edges(FactorKind kind, int length) {
  return kind == FactorKind::Cycle ? length : length - 1;
}

}  // namespace

Grid build_grid(FactorKind row_kind, int rows, FactorKind col_kind, int cols) {
  if (rows < 1 || cols < 1) throw std::invalid_argument("grid dimensions must be positive");
  if (row_kind == FactorKind::Cycle && rows < 3)
    throw std::invalid_argument("cycle row factor needs length >= 3");
  if (col_kind == FactorKind::Cycle && cols < 3)
    throw std::invalid_argument("cycle column factor needs length >= 3");
  if (rows * cols > VertexSet::kCapacity)
    throw std::invalid_argument("grid exceeds " + std::to_string(VertexSet::kCapacity) +
                                " vertices");
  Grid g;
  g.row_kind_ = row_kind;
  g.rows_ = rows;
  g.col_kind_ = col_kind;
  g.cols_ = cols;
  return g;
}

int Grid::edge_count() const {
  return cols_ * factor_edges(row_kind_, rows_) + rows_ * factor_edges(col_kind_, cols_);
}

int Grid::index(Vertex v) const {
  if (!contains(v))
    throw std::out_of_range("vertex (" + std::to_string(v.row) + "," + std::to_string(v.col) +
                            ") outside " + name());
  return (v.row - 1) * cols_ + (v.col - 1);
}

int Grid::row_distance(int a, int b) const { return factor_distance(row_kind_, rows_, a, b); }
int Grid::col_distance(int a, int b) const { return factor_distance(col_kind_, cols_, a, b); }

int Grid::distance(Vertex u, Vertex v) const {
  if (!contains(u) || !contains(v)) throw std::out_of_range("vertex outside " + name());
  return row_distance(u.row, v.row) + col_distance(u.col, v.col);
}

VertexSet Grid::all_vertices() const {
  VertexSet s;
  for (int i = 0; i < vertex_count(); ++i) s.insert(i);
  return s;
}

VertexSet Grid::column(int col) const { return columns(col, col); }

VertexSet Grid::columns(int first, int last) const {
  VertexSet s;
  for (int r = 1; r <= rows_; ++r)
    for (int c = std::max(first, 1); c <= std::min(last, cols_); ++c) s.insert(index({r, c}));
  return s;
}

VertexSet Grid::ball(int center, int radius) const {
  VertexSet s;
  const Vertex c = vertex(center);
  for (int i = 0; i < vertex_count(); ++i)
    if (distance(c, vertex(i)) <= radius) s.insert(i);
  return s;
}

std::string Grid::name() const {
  return std::string(row_kind_ == FactorKind::Cycle ? "C" : "P") + std::to_string(rows_) + "x" +
         (col_kind_ == FactorKind::Cycle ? "C" : "P") + std::to_string(cols_);
}

BallTable::BallTable(const Grid& grid) : grid_(grid) {
  const int n = grid.vertex_count();
  for (auto& layer : balls_) layer.resize(n);
  for (int v = 0; v < n; ++v) {
    const Vertex c = grid.vertex(v);
    for (int u = 0; u < n; ++u) {
      const int d = grid.distance(c, grid.vertex(u));
      for (int r = d; r <= 2; ++r) balls_[r][v].insert(u);
    }
  }
}

VertexSet BallTable::range(const std::vector<std::uint8_t>& strengths) const {
  VertexSet heard;
  for (int v = 0; v < static_cast<int>(strengths.size()); ++v)
    if (strengths[v] > 0) heard |= balls_[strengths[v]][v];
  return heard;
}

void Broadcast::set(Vertex v, int strength) { set_index(grid_.index(v), strength); }

void Broadcast::set_index(int i, int strength) {
  if (strength < 0 || strength > 2) throw std::invalid_argument("strength must be 0, 1 or 2");
  strength_.at(i) = static_cast<std::uint8_t>(strength);
}

int Broadcast::cost() const {
  int total = 0;
  for (auto s : strength_) total += s;
  return total;
}

VertexSet Broadcast::support() const {
  VertexSet s;
  for (int i = 0; i < static_cast<int>(strength_.size()); ++i)
    if (strength_[i] > 0) s.insert(i);
  return s;
}

VertexSet range_of(const Broadcast& f) {
  VertexSet heard;
  const Grid& g = f.grid();
  for (int v = 0; v < g.vertex_count(); ++v) {
    const int s = f.at_index(v);
    if (s > 0) heard |= g.ball(v, s);
  }
  return heard;
}

bool dominates(const Broadcast& f, const VertexSet& targets) {
  return targets.is_subset_of(range_of(f));
}

namespace {

void require_same_grid(const Broadcast& f, const Broadcast& g) {
  if (!(f.grid() == g.grid())) throw std::invalid_argument("broadcasts live on different grids");
}

}  // namespace

Broadcast combine(const Broadcast& f, const Broadcast& g) {
  require_same_grid(f, g);
  Broadcast out(f.grid());
  for (int i = 0; i < f.grid().vertex_count(); ++i)
    out.set_index(i, std::max(f.at_index(i), g.at_index(i)));
  return out;
}

Broadcast subtract(const Broadcast& f, const Broadcast& g) {
  require_same_grid(f, g);
  Broadcast out(f.grid());
  for (int i = 0; i < f.grid().vertex_count(); ++i)
    out.set_index(i, g.at_index(i) > 0 ? 0 : f.at_index(i));
  return out;
}

Broadcast induce(const Broadcast& f, const VertexSet& x) {
  Broadcast out(f.grid());
  x.for_each([&](int i) {
    if (i < f.grid().vertex_count()) out.set_index(i, f.at_index(i));
  });
  return out;
}

std::string format_matrix(const Broadcast& f) {
  std::ostringstream os;
  const Grid& g = f.grid();
  for (int r = 1; r <= g.rows(); ++r) {
    for (int c = 1; c <= g.cols(); ++c) os << (c > 1 ? " " : "") << f.at({r, c});
    os << '\n';
  }
  return os.str();
}

}  // namespace bdcert
