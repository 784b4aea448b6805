// bdcert: exact 2-limited broadcast domination numbers and lower-bound proof
// certification for grid products.

#include <atomic>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "bdcert/bound.hpp"
#include "bdcert/certifier.hpp"
#include "bdcert/checkpoint.hpp"
#include "bdcert/config.hpp"
#include "bdcert/presets.hpp"
#include "bdcert/report.hpp"
#include "bdcert/runner.hpp"
#include "bdcert/solver.hpp"

namespace {

using namespace bdcert;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitSurvivor = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIncomplete = 4;

std::atomic<bool> g_cancel{false};

extern "C" void on_signal(int) { g_cancel = true; }

struct FactorArg {
  FactorKind kind = FactorKind::Path;
  int size = 0;
};

// "cycle:3", "path:7", also "C:3".
FactorArg parse_factor(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("expected kind:size, got " + text);
  FactorArg f;
  f.kind = parse_factor_kind(text.substr(0, colon));
  std::size_t used = 0;
  f.size = std::stoi(text.substr(colon + 1), &used);
  if (used != text.size() - colon - 1) throw std::invalid_argument("bad size in " + text);
  return f;
}

int default_workers(std::optional<int> from_config) {
  if (from_config) return *from_config;
  if (const char* env = std::getenv("BDCERT_WORKERS")) {
    try {
      const int w = std::stoi(env);
      if (w > 0) return w;
    } catch (const std::exception&) {
    }
    std::cerr << "ignoring BDCERT_WORKERS=" << env << '\n';
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << text;
  if (!out) {
    std::cerr << "cannot write " << path << '\n';
    return false;
  }
  return true;
}

void print_params(const ProofParams& p) {
  std::cout << "window " << to_string(p.window.family()) << ' ' << p.window.rows()
            << " k=" << p.window.k() << '\n'
            << "s " << p.s << '\n'
            << "t " << p.t << '\n'
            << "m_vector " << p.mvec.to_string() << '\n';
}

// ---- gamma -----------------------------------------------------------------

struct GammaArgs {
  std::string rows;
  std::string cols;
  bool witness = false;
};

int cmd_gamma(const GammaArgs& a) {
  const FactorArg r = parse_factor(a.rows);
  const FactorArg c = parse_factor(a.cols);
  const Grid g = build_grid(r.kind, r.size, c.kind, c.size);
  const CoverSolution sol = min_cost_cover(g, g.all_vertices());
  std::cout << *sol.optimal_cost << '\n';
  if (a.witness) std::cout << format_matrix(*sol.witness);
  return kExitOk;
}

// ---- prove -----------------------------------------------------------------

struct ProveArgs {
  std::string theorem;
  std::string config;
  std::optional<int> workers;
  std::string checkpoint;
  bool resume = false;
  double checkpoint_every = 30.0;
  std::optional<double> max_seconds;
  std::optional<std::int64_t> stop_at_chunk;
  std::string csv;
  std::string json;
  bool full = false;
  bool force = false;
  bool progress = false;
};

int cmd_prove(const ProveArgs& a) {
  ProofConfig cfg;
  ResolvedConfig resolved;
  try {
    if (!a.config.empty()) cfg = load_config(a.config);
    if (!a.theorem.empty()) cfg.theorem = a.theorem;
    if (!cfg.theorem && a.config.empty()) throw ConfigError("give --theorem or --config");
    resolved = resolve_config(cfg, a.force);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  for (const auto& m : resolved.mismatches) std::cerr << "warning: forced override " << m << '\n';
  const ProofParams& params = resolved.params;

  RunOptions opt;
  opt.workers = a.workers ? *a.workers : default_workers(cfg.workers);
  opt.checkpoint_path = !a.checkpoint.empty() ? a.checkpoint : cfg.checkpoint.value_or("");
  opt.resume = a.resume;
  opt.config_hash = config_hash(params);
  opt.checkpoint_every = std::chrono::milliseconds(static_cast<long>(a.checkpoint_every * 1000));
  if (a.max_seconds)
    opt.time_limit = std::chrono::milliseconds(static_cast<long>(*a.max_seconds * 1000));
  opt.stop_at_chunk = a.stop_at_chunk;
  opt.cancel = &g_cancel;
  if (a.progress) {
    opt.on_progress = [last = std::chrono::steady_clock::time_point{}](std::int64_t done,
                                                                        std::int64_t total) mutable {
      const auto now = std::chrono::steady_clock::now();
      if (now - last < std::chrono::seconds(10) && done != total) return;
      last = now;
      std::cerr << "chunks " << done << '/' << total << '\n';
    };
  }
  if (opt.resume && opt.checkpoint_path.empty()) {
    std::cerr << "--resume needs a checkpoint path\n";
    return kExitError;
  }

  std::signal(SIGINT, on_signal);
  std::signal(SIGTERM, on_signal);

  RunResult run;
  try {
    run = run_proof(params, opt);
  } catch (const CheckpointError& e) {
    std::cerr << "checkpoint error: " << e.what() << '\n';
    return kExitError;
  }

  const std::string csv = to_csv(run.report, a.full);
  RunInfo info;
  info.theorem = cfg.theorem.value_or("");
  info.config_hash = opt.config_hash;
  info.completed = run.completed;
  info.chunks_done = run.chunks_done;
  info.chunks_total = run.chunks_total;
  info.workers = run.workers;
  info.seconds = run.seconds;

  const std::string csv_path = !a.csv.empty() ? a.csv : cfg.report_csv.value_or("");
  const std::string json_path = !a.json.empty() ? a.json : cfg.report_json.value_or("");
  bool files_ok = true;
  if (!csv_path.empty()) files_ok = write_file(csv_path, csv) && files_ok;
  if (!json_path.empty()) files_ok = write_file(json_path, to_json(params, run.report, info)) && files_ok;
  std::cout << csv;

  if (!run.completed) {
    std::cerr << "stopped after " << run.chunks_done << '/' << run.chunks_total << " chunks ("
              << run.seconds << " s)\n";
    return kExitIncomplete;
  }
  if (run.report.survivor) {
    std::cerr << "surviving case at cost " << run.report.survivor->cost << ":\n"
              << format_survivor(params.window, *run.report.survivor);
    return kExitSurvivor;
  }
  std::cerr << "verdict: lower bound certified (" << run.seconds << " s, " << run.workers
            << " workers)\n";
  return files_ok ? kExitOk : kExitError;
}

// ---- verify-tables ---------------------------------------------------------

int cmd_verify_tables(const std::vector<std::string>& ids, std::optional<int> workers) {
  bool all_pass = true;
  for (const std::string& id : ids) {
    const TheoremPreset& preset = theorem_preset(id);
    RunOptions opt;
    opt.workers = workers ? *workers : default_workers(std::nullopt);
    const RunResult run = run_proof(preset.params(), opt);
    for (const CellDiff& d : diff_golden(run.report, preset.golden)) {
      std::cout << (d.pass() ? "PASS " : "FAIL ") << id << " cost=" << d.cost << ' '
                << step_name(d.step) << " expected=" << d.expected << " actual=" << d.actual
                << '\n';
      all_pass = all_pass && d.pass();
    }
    const bool verdict = run.report.verdict && !run.report.survivor;
    std::cout << (verdict ? "PASS " : "FAIL ") << id << " verdict=" << (verdict ? "true" : "false")
              << '\n';
    all_pass = all_pass && verdict;
  }
  return all_pass ? kExitOk : kExitError;
}

// ---- sweep -----------------------------------------------------------------

struct SweepArgs {
  std::string rows;
  std::string cols = "cycle";
  std::string theorem;
  std::optional<int> p, a;
  std::vector<int> c;
  int lo = 3;
  int hi = 16;
};

int cmd_sweep(const SweepArgs& s) {
  BoundSpec b;
  FactorArg r;
  if (!s.theorem.empty()) {
    const TheoremPreset& preset = theorem_preset(s.theorem);
    b = preset.bound;
    r = {preset.family, preset.rows};
  }
  if (!s.rows.empty()) r = parse_factor(s.rows);
  if (s.p) b.period = *s.p;
  if (s.a) b.slope = *s.a;
  if (!s.c.empty()) b.offsets = s.c;
  if (r.size <= 0) throw std::invalid_argument("give --rows or --theorem");
  validate(b);
  const FactorKind col = parse_factor_kind(s.cols);
  bool ok = true;
  std::cout << "n,gamma,bound,ok\n";
  for (const SweepRow& row : base_case_sweep(r.kind, r.size, col, b, s.lo, s.hi)) {
    std::cout << row.n << ',' << row.gamma << ',' << row.bound << ',' << (row.ok ? "true" : "false")
              << '\n';
    ok = ok && row.ok;
  }
  return ok ? kExitOk : kExitError;
}

// ---- mvector / params ------------------------------------------------------

int cmd_params(const std::string& theorem, const std::string& config, bool mvector_only) {
  ProofConfig cfg;
  ResolvedConfig resolved;
  try {
    if (!config.empty()) cfg = load_config(config);
    if (!theorem.empty()) cfg.theorem = theorem;
    if (!cfg.theorem && config.empty()) throw ConfigError("give --theorem or --config");
    resolved = resolve_config(cfg, true);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kExitConfig;
  }
  const ProofParams& d = resolved.derived;
  if (mvector_only) {
    std::cout << d.mvec.to_string() << '\n';
  } else {
    print_params(d);
  }
  if (cfg.theorem) {
    const TheoremPreset& p = theorem_preset(*cfg.theorem);
    const bool same = mvector_only ? d.mvec == p.mvec
                                   : (d.s == p.s && d.t == p.t && d.mvec == p.mvec);
    std::cout << (same ? "matches preset " : "differs from preset ") << p.id << '\n';
    if (!same) return kExitError;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact 2-limited broadcast domination on grid products and proof certification"};
  app.require_subcommand(1);

  GammaArgs gamma;
  auto* g = app.add_subcommand("gamma", "Compute gamma_{b,2} of a grid product");
  g->add_option("--rows", gamma.rows, "Row factor, e.g. cycle:3")->required();
  g->add_option("--cols", gamma.cols, "Column factor, e.g. path:2")->required();
  g->add_flag("--witness", gamma.witness, "Also print an optimal broadcast");

  ProveArgs prove;
  auto* p = app.add_subcommand("prove", "Run the case analysis for a lower bound");
  p->add_option("--theorem", prove.theorem, "Preset id")->check(CLI::IsMember(theorem_ids()));
  p->add_option("--config", prove.config, "Proof config JSON")->check(CLI::ExistingFile);
  p->add_option("--workers", prove.workers, "Worker threads")->check(CLI::PositiveNumber);
  p->add_option("--checkpoint", prove.checkpoint, "Snapshot file");
  p->add_flag("--resume", prove.resume, "Continue from the snapshot");
  p->add_option("--checkpoint-every", prove.checkpoint_every, "Seconds between snapshots")
      ->check(CLI::PositiveNumber);
  p->add_option("--max-seconds", prove.max_seconds, "Stop cleanly after this many seconds");
  p->add_option("--stop-at-chunk", prove.stop_at_chunk, "Stop once this many chunks are done");
  p->add_option("--csv", prove.csv, "Write the table as CSV");
  p->add_option("--json", prove.json, "Write the full JSON report");
  p->add_flag("--full", prove.full, "Keep all-zero rows in the CSV");
  p->add_flag("--force", prove.force, "Accept overrides that disagree with derived values");
  p->add_flag("--progress", prove.progress, "Report progress on stderr");

  std::vector<std::string> verify_ids;
  std::optional<int> verify_workers;
  auto* v = app.add_subcommand("verify-tables", "Diff proof runs against the reference tables");
  v->add_option("ids", verify_ids, "Theorem ids")->required()->check(CLI::IsMember(theorem_ids()));
  v->add_option("--workers", verify_workers, "Worker threads")->check(CLI::PositiveNumber);

  SweepArgs sweep;
  auto* s = app.add_subcommand("sweep", "Compare gamma_{b,2} with B(n) over a range of n");
  s->add_option("--theorem", sweep.theorem, "Take rows and bound from a preset")
      ->check(CLI::IsMember(theorem_ids()));
  s->add_option("--rows", sweep.rows, "Row factor, e.g. cycle:3");
  s->add_option("--cols", sweep.cols, "Column factor kind")->capture_default_str();
  s->add_option("--p", sweep.p, "Bound period");
  s->add_option("--a", sweep.a, "Bound slope");
  s->add_option("--c", sweep.c, "Bound offsets");
  s->add_option("--from", sweep.lo, "First n")->capture_default_str();
  s->add_option("--to", sweep.hi, "Last n")->capture_default_str();

  std::string pm_theorem;
  std::string pm_config;
  auto* mv = app.add_subcommand("mvector", "Print the derived m-vector");
  mv->add_option("--theorem", pm_theorem, "Preset id")->check(CLI::IsMember(theorem_ids()));
  mv->add_option("--config", pm_config, "Proof config JSON")->check(CLI::ExistingFile);
  auto* pa = app.add_subcommand("params", "Print the derived s, t and m-vector");
  pa->add_option("--theorem", pm_theorem, "Preset id")->check(CLI::IsMember(theorem_ids()));
  pa->add_option("--config", pm_config, "Proof config JSON")->check(CLI::ExistingFile);

  CLI11_PARSE(app, argc, argv);

  try {
    if (g->parsed()) return cmd_gamma(gamma);
    if (p->parsed()) return cmd_prove(prove);
    if (v->parsed()) return cmd_verify_tables(verify_ids, verify_workers);
    if (s->parsed()) return cmd_sweep(sweep);
    if (mv->parsed()) return cmd_params(pm_theorem, pm_config, true);
    if (pa->parsed()) return cmd_params(pm_theorem, pm_config, false);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}
