#include "bdcert/certifier.hpp"

#include <algorithm>
#include <stdexcept>

namespace bdcert {

namespace {

constexpr std::array<std::string_view, kStepCount> kStepNames = {
    "TotalCases",
    "DoesNotDominate",
    "ForbiddenBroadcast",
    "HasBroadcast",
    "InductiveArgument",
    "NecessaryBroadcast+HasBroadcast",
    "NecessaryBroadcast+InductiveArgument",
    "AllSubcases+HasBroadcast",
    "AllSubcases+InductiveArgument",
};

}  // namespace

std::string_view step_name(Step step) { return kStepNames[static_cast<int>(step)]; }

Step parse_step(std::string_view name) {
  for (int i = 0; i < kStepCount; ++i)
    if (kStepNames[i] == name) return static_cast<Step>(i);
  throw std::invalid_argument("unknown step name");
}

CaseReport::CaseReport(int s, int t) : s_(s), t_(t) {
  if (t >= s) rows_.resize(t - s + 1, StepCounts{});
}

std::int64_t CaseReport::get(int cost, Step step) const {
  if (!has_cost(cost)) return 0;
  return rows_[cost - s_][static_cast<int>(step)];
}

void CaseReport::add(int cost, Step step, std::int64_t n) {
  if (!has_cost(cost)) throw std::out_of_range("cost outside the report range");
  rows_[cost - s_][static_cast<int>(step)] += n;
}

CaseReport& CaseReport::operator+=(const CaseReport& other) {
  if (other.s_ != s_ || other.t_ != t_) throw std::invalid_argument("report ranges differ");
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (int j = 0; j < kStepCount; ++j) rows_[i][j] += other.rows_[i][j];
  verdict = verdict && other.verdict;
  if (!survivor) survivor = other.survivor;
  return *this;
}

int compute_s(const Window& w) {
  return gamma2(build_grid(w.family(), w.rows(), FactorKind::Path, w.k() - 12));
}

ProofParams derive_params(const Window& w, const BoundSpec& b) {
  ProofParams p;
  p.window = w;
  p.bound = b;
  p.s = compute_s(w);
  p.t = compute_t(b, b.n0, w.k());
  p.mvec = compute_m_vector(b, b.n0, w.k());
  return p;
}

Splice splice_columns(const Window& w, const std::vector<int>& deleted) {
  Splice out;
  out.new_column.assign(w.k() + 1, 0);
  std::vector<bool> gone(w.k() + 1, false);
  for (int c : deleted) {
    if (c < 1 || c > w.k()) throw std::invalid_argument("column outside the window");
    gone[c] = true;
  }
  int next = 0;
  for (int c = 1; c <= w.k(); ++c)
    if (!gone[c]) out.new_column[c] = ++next;
  if (next == 0) throw std::invalid_argument("cannot delete every column");
  out.grid = build_grid(w.family(), w.rows(), FactorKind::Path, next);
  return out;
}

VertexSet project(const Window& w, const Splice& s, const VertexSet& r) {
  VertexSet out;
  const int width = s.grid.cols();
  r.for_each([&](int v) {
    const int row = v / w.k();
    const int nc = s.new_column[v % w.k() + 1];
    if (nc > 0) out.insert(row * width + nc - 1);
  });
  return out;
}

struct Certifier::Shared {
  Grid grid;
  std::shared_ptr<BallTable> balls;
  std::shared_ptr<CoverSolver> solver;
  // strips[w] covers (family)_m x P_w for w in 1..k; index 0 unused.
  std::vector<std::shared_ptr<CoverSolver>> strips;
  std::vector<VertexSet> columns;  // 1-based
  VertexSet middle;                // c_7..c_{k-6}
};

Certifier::Certifier(const Window& w, MVector mvec) : window_(w), mvec_(std::move(mvec)) {
  auto sh = std::make_shared<Shared>();
  sh->grid = w.grid();
  sh->balls = std::make_shared<BallTable>(sh->grid);
  sh->solver = std::make_shared<CoverSolver>(sh->balls);
  sh->strips.resize(w.k() + 1);
  for (int width = 1; width < w.k(); ++width)
    sh->strips[width] =
        std::make_shared<CoverSolver>(build_grid(w.family(), w.rows(), FactorKind::Path, width));
  sh->strips[w.k()] = sh->solver;
  const Grid& g = sh->grid;
  sh->columns.resize(w.k() + 1);
  for (int c = 1; c <= w.k(); ++c) sh->columns[c] = g.column(c);
  sh->middle = g.columns(7, w.k() - 6);
  shared_ = std::move(sh);
}

const Grid& Certifier::grid() const { return shared_->grid; }

VertexSet Certifier::range(const Broadcast& f) const { return shared_->balls->range(f.strengths()); }

bool Certifier::does_not_dominate(const VertexSet& range) const {
  return !shared_->middle.is_subset_of(range);
}

bool Certifier::forbidden(const Broadcast& f) const {
  VertexSet ones;
  VertexSet twos;
  const auto& st = f.strengths();
  for (int v = 0; v < static_cast<int>(st.size()); ++v) {
    if (st[v] == 1) ones.insert(v);
    if (st[v] == 2) twos.insert(v);
  }
  // A 1 next to a 2, or two 1s within distance 2 of each other.
  bool hit = false;
  ones.for_each([&](int v) {
    if (hit) return;
    VertexSet others = ones;
    others.erase(v);
    hit = shared_->balls->ball(v, 1).intersects(twos) || shared_->balls->ball(v, 2).intersects(others);
  });
  return hit;
}

bool Certifier::has_broadcast(const VertexSet& targets, int budget) const {
  if (budget < 0) return false;
  if (targets.empty()) return true;
  return shared_->solver->has_cover(targets, budget);
}

std::optional<int> Certifier::inductive_argument(const VertexSet& r, int x) const {
  const int k = window_.k();
  std::vector<std::pair<int, int>> order;  // (count, column)
  for (int c = 1; c <= k; ++c) {
    const int n = r.intersection_size(shared_->columns[c]);
    if (n > 0) order.emplace_back(n, c);
  }
  std::stable_sort(order.begin(), order.end(),
                   [](const auto& a, const auto& b) { return a.first > b.first; });
  VertexSet remaining = r;
  std::vector<int> deleted;
  for (int i = 1; i <= static_cast<int>(order.size()); ++i) {
    remaining -= shared_->columns[order[i - 1].second];
    deleted.push_back(order[i - 1].second);
    const auto mi = mvec_.at(i);
    if (!mi || x - *mi < 0) continue;
    const int budget = x - *mi;
    // Every column gone leaves an empty target set, met at cost 0.
    if (i == k || remaining.empty()) return i;
    const Splice sp = splice_columns(window_, deleted);
    const VertexSet projected = project(window_, sp, remaining);
    if (shared_->strips[k - i]->has_cover(projected, budget)) return i;
  }
  return std::nullopt;
}

Broadcast Certifier::necessary_extension(const Broadcast& g) const {
  const int k = window_.k();
  const VertexSet r = range(g);
  Broadcast out = g;
  for (int row = 1; row <= window_.rows(); ++row) {
    if (!r.contains(grid().index({row, 6}))) out.set({row, 4}, 2);
    if (!r.contains(grid().index({row, k - 5}))) out.set({row, k - 3}, 2);
  }
  return out;
}

namespace {

struct Candidate {
  int vertex;
  int strength;
  VertexSet hits;  // targets it dominates
};

// Every set of transmitters from `pool` that dominates `targets`, uses each
// vertex at most once and has no member whose share of the target column is
// contained in another member's share.
void side_extensions(const std::vector<Candidate>& pool, const VertexSet& targets,
                     std::vector<std::vector<int>>& out) {
  if (targets.empty()) {
    out.emplace_back();
    return;
  }
  std::vector<int> chosen;
  VertexSet covered;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == pool.size()) {
      if (targets.is_subset_of(covered)) out.push_back(chosen);
      return;
    }
    self(self, i + 1);
    const Candidate& c = pool[i];
    for (int j : chosen) {
      const Candidate& d = pool[j];
      if (d.vertex == c.vertex || c.hits.is_subset_of(d.hits) || d.hits.is_subset_of(c.hits))
        return;
    }
    const VertexSet saved = covered;
    chosen.push_back(static_cast<int>(i));
    covered |= c.hits;
    self(self, i + 1);
    chosen.pop_back();
    covered = saved;
  };
  rec(rec, 0);
}

}  // namespace

std::vector<Broadcast> Certifier::subcases(const Broadcast& g_prime) const {
  const int k = window_.k();
  const Grid& g = grid();
  const VertexSet r = range(g_prime);
  const VertexSet left_targets = shared_->columns[5] - r;
  const VertexSet right_targets = shared_->columns[k - 4] - r;

  auto pool_for = [&](int first, int last, const VertexSet& targets) {
    std::vector<Candidate> pool;
    for (int v = 0; v < g.vertex_count(); ++v) {
      const int c = g.vertex(v).col;
      if (c < first || c > last || g_prime.at_index(v) != 0) continue;
      for (int s = 1; s <= 2; ++s) {
        const VertexSet hits = shared_->balls->ball(v, s) & targets;
        if (!hits.empty()) pool.push_back({v, s, hits});
      }
    }
    return pool;
  };
  const auto left_pool = pool_for(1, 4, left_targets);
  const auto right_pool = pool_for(k - 3, k, right_targets);
  std::vector<std::vector<int>> lefts;
  std::vector<std::vector<int>> rights;
  side_extensions(left_pool, left_targets, lefts);
  side_extensions(right_pool, right_targets, rights);

  std::vector<Broadcast> out;
  for (const auto& l : lefts) {
    for (const auto& rt : rights) {
      Broadcast ext = g_prime;
      for (int i : l) ext.set_index(left_pool[i].vertex, left_pool[i].strength);
      for (int i : rt) ext.set_index(right_pool[i].vertex, right_pool[i].strength);
      if (!forbidden(ext)) out.push_back(std::move(ext));
    }
  }
  return out;
}

CaseOutcome Certifier::examine(const Broadcast& g) const {
  CaseOutcome out;
  const VertexSet r = range(g);
  if (does_not_dominate(r)) {
    out.step = Step::DoesNotDominate;
    return out;
  }
  if (forbidden(g)) {
    out.step = Step::ForbiddenBroadcast;
    return out;
  }
  const int cost = g.cost();
  if (has_broadcast(r, cost - 1)) {
    out.step = Step::HasBroadcast;
    return out;
  }
  if (inductive_argument(r, cost)) {
    out.step = Step::InductiveArgument;
    return out;
  }
  const Broadcast gp = necessary_extension(g);
  const VertexSet rp = range(gp);
  const int cost_p = gp.cost();
  if (has_broadcast(rp, cost_p - 1)) {
    out.step = Step::NecessaryHasBroadcast;
    return out;
  }
  if (inductive_argument(rp, cost_p)) {
    out.step = Step::NecessaryInductiveArgument;
    return out;
  }
  for (const Broadcast& gpp : subcases(gp)) {
    const VertexSet rpp = range(gpp);
    const int cost_pp = gpp.cost();
    if (has_broadcast(rpp, cost_pp - 1)) {
      ++out.subcases_has;
    } else if (inductive_argument(rpp, cost_pp)) {
      ++out.subcases_inductive;
    } else {
      return out;
    }
  }
  out.step = Step::SubcasesHasBroadcast;
  return out;
}

CaseOutcome Certifier::examine(const ActivePattern& p) const {
  return examine(to_broadcast(window_, p));
}

bool does_not_dominate(const Window& w, const Broadcast& g) {
  const Grid grid = w.grid();
  return !grid.columns(7, w.k() - 6).is_subset_of(range_of(g));
}

bool inductive_argument(const Window& w, const VertexSet& r, int x, const MVector& mvec) {
  return Certifier(w, mvec).inductive_argument(r, x).has_value();
}

NecessaryResult necessary_broadcast(const Window& w, const Broadcast& g, const MVector& mvec) {
  const Certifier c(w, mvec);
  const Broadcast gp = c.necessary_extension(g);
  const VertexSet rp = c.range(gp);
  if (c.has_broadcast(rp, gp.cost() - 1)) return NecessaryResult::HasBroadcast;
  if (c.inductive_argument(rp, gp.cost())) return NecessaryResult::Inductive;
  return NecessaryResult::Neither;
}

SubcaseTally all_subcases(const Window& w, const Broadcast& g, const MVector& mvec) {
  const Certifier c(w, mvec);
  SubcaseTally tally;
  for (const Broadcast& gpp : c.subcases(c.necessary_extension(g))) {
    const VertexSet r = c.range(gpp);
    if (c.has_broadcast(r, gpp.cost() - 1)) {
      ++tally.has;
    } else if (c.inductive_argument(r, gpp.cost())) {
      ++tally.inductive;
    } else {
      tally.resolved = false;
      return tally;
    }
  }
  return tally;
}

CaseReport proved_lower_bound(const ProofParams& params) {
  CaseReport report(params.s, params.t);
  if (params.t < params.s) return report;
  const Certifier cert(params.window, params.mvec);
  const CaseEnumerator e(params.window);
  for (const ChunkKey& key : e.chunks(params.s, params.t)) {
    bool stop = false;
    e.for_each_in_chunk(key, [&](const WindowCase& wc) {
      if (stop) return;
      report.add(wc.cost, Step::TotalCases);
      const CaseOutcome o = cert.examine(wc.pattern);
      if (!o.resolved()) {
        report.add(wc.cost, Step::SubcasesHasBroadcast, o.subcases_has);
        report.add(wc.cost, Step::SubcasesInductiveArgument, o.subcases_inductive);
        report.verdict = false;
        report.survivor = Survivor{wc.cost, wc.pattern};
        stop = true;
        return;
      }
      if (o.step == Step::SubcasesHasBroadcast) {
        report.add(wc.cost, Step::SubcasesHasBroadcast, o.subcases_has);
        report.add(wc.cost, Step::SubcasesInductiveArgument, o.subcases_inductive);
      } else {
        report.add(wc.cost, o.step);
      }
    });
    if (stop) break;
  }
  return report;
}

Broadcast restrict_and_patch(const Broadcast& f, const std::vector<int>& deleted) {
  const Grid& g = f.grid();
  if (g.col_kind() != FactorKind::Cycle)
    throw std::invalid_argument("patching needs a cycle column factor");
  std::vector<bool> gone(g.cols() + 1, false);
  for (int c : deleted) {
    if (c < 1 || c > g.cols()) throw std::invalid_argument("column outside the grid");
    gone[c] = true;
  }
  std::vector<int> kept;
  for (int c = 1; c <= g.cols(); ++c)
    if (!gone[c]) kept.push_back(c);
  if (kept.size() < 3) throw std::invalid_argument("patched graph needs at least three columns");
  const Grid out_grid =
      build_grid(g.row_kind(), g.rows(), FactorKind::Cycle, static_cast<int>(kept.size()));
  Broadcast out(out_grid);
  std::vector<int> position(g.cols() + 1, 0);
  for (std::size_t i = 0; i < kept.size(); ++i) position[kept[i]] = static_cast<int>(i) + 1;
  for (int row = 1; row <= g.rows(); ++row)
    for (int c : kept) out.set({row, position[c]}, f.at({row, c}));
  for (int row = 1; row <= g.rows(); ++row) {
    for (int c = 1; c <= g.cols(); ++c) {
      if (!gone[c] || f.at({row, c}) == 0) continue;
      int best = kept.front();
      for (int kc : kept) {
        const int d = g.col_distance(c, kc);
        const int bd = g.col_distance(c, best);
        if (d < bd || (d == bd && kc < best)) best = kc;
      }
      const Vertex target{row, position[best]};
      out.set(target, std::max(out.at(target), f.at({row, c})));
    }
  }
  return out;
}

std::vector<SweepRow> base_case_sweep(FactorKind row_kind, int m, FactorKind col_kind,
                                      const BoundSpec& b, int lo, int hi) {
  std::vector<SweepRow> out;
  for (int n = lo; n <= hi; ++n) {
    SweepRow row;
    row.n = n;
    row.gamma = gamma2(build_grid(row_kind, m, col_kind, n));
    row.bound = eval_bound(b, n);
    row.ok = row.gamma == row.bound;
    out.push_back(row);
  }
  return out;
}

}  // namespace bdcert
