#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "bdcert/checkpoint.hpp"
#include "bdcert/config.hpp"
#include "bdcert/presets.hpp"
#include "bdcert/report.hpp"
#include "bdcert/runner.hpp"

namespace bdcert {
namespace {

namespace fs = std::filesystem;

fs::path temp_file(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "bdcert_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  fs::remove(p);
  return p;
}

TEST(Csv, C3Layout) {
  const TheoremPreset& p = theorem_preset("C3");
  const CaseReport r = proved_lower_bound(p.params());
  EXPECT_EQ(to_csv(r),
            "step,cost_2,cost_3\n"
            "TotalCases,54,302\n"
            "DoesNotDominate,48,231\n"
            "ForbiddenBroadcast,4,45\n"
            "InductiveArgument,0,12\n"
            "NecessaryBroadcast+HasBroadcast,0,8\n"
            "NecessaryBroadcast+InductiveArgument,2,3\n"
            "AllSubcases+HasBroadcast,0,45\n"
            "AllSubcases+InductiveArgument,0,63\n");
  EXPECT_NE(to_csv(r, true).find("HasBroadcast,0,0\n"), std::string::npos);
}

TEST(Csv, EmptyReport) {
  EXPECT_EQ(to_csv(CaseReport(4, 3)), "step\nTotalCases\n");
}

TEST(Json, CarriesDerivedParameters) {
  const TheoremPreset& p = theorem_preset("C3");
  const CaseReport r = proved_lower_bound(p.params());
  RunInfo info;
  info.theorem = "C3";
  const std::string j = to_json(p.params(), r, info);
  EXPECT_NE(j.find("\"derived\""), std::string::npos);
  EXPECT_NE(j.find("\"verdict\": true"), std::string::npos);
  EXPECT_NE(j.find("\"runtime_seconds\""), std::string::npos);
}

TEST(Config, ExplicitWindow) {
  const ProofConfig cfg = parse_config(R"({"row_factor": "cycle", "m": 3, "column_target": "cycle",
      "k": 14, "p": 3, "a": 2, "c": [0, 1, 2], "n0": 17, "workers": 2})");
  const ResolvedConfig r = resolve_config(cfg, false);
  EXPECT_EQ(r.params.s, 2);
  EXPECT_EQ(r.params.t, 3);
  EXPECT_EQ(r.params.mvec, theorem_preset("C3").mvec);
  EXPECT_EQ(cfg.workers, 2);
  EXPECT_EQ(config_hash(r.params), config_hash(theorem_preset("C3").params()));
}

TEST(Config, OverridesAreChecked) {
  const ProofConfig bad = parse_config(R"({"theorem": "C3", "t": 5})");
  EXPECT_THROW((void)resolve_config(bad, false), ConfigError);
  const ResolvedConfig forced = resolve_config(bad, true);
  EXPECT_EQ(forced.params.t, 5);
  EXPECT_EQ(forced.mismatches.size(), 1U);

  const ProofConfig mv = parse_config(R"({"theorem": "C3", "m_vector": [1, 2, null]})");
  EXPECT_THROW((void)resolve_config(mv, false), ConfigError);
  const ProofConfig ok = parse_config(R"({"theorem": "C4", "s": 2, "t": 4})");
  EXPECT_TRUE(resolve_config(ok, false).mismatches.empty());
}

TEST(Config, Rejections) {
  EXPECT_THROW((void)parse_config("{"), ConfigError);
  EXPECT_THROW((void)parse_config("[]"), ConfigError);
  EXPECT_THROW((void)parse_config(R"({"theorem": "C3", "bogus": 1})"), ConfigError);
  EXPECT_THROW((void)parse_config(R"({"k": 14.5})"), ConfigError);
  EXPECT_THROW((void)parse_config(R"({"row_factor": "tree"})"), ConfigError);
  EXPECT_THROW((void)resolve_config(parse_config(R"({"theorem": "C9"})"), false), ConfigError);
  EXPECT_THROW((void)resolve_config(parse_config(R"({"row_factor": "cycle", "m": 3})"), false),
               ConfigError);
  EXPECT_THROW(
      (void)resolve_config(parse_config(R"({"theorem": "C3", "column_target": "path"})"), false),
      ConfigError);
  EXPECT_THROW((void)resolve_config(parse_config(R"({"theorem": "C3", "n0": 12})"), false),
               ConfigError);
}

TEST(Config, HashTracksWindow) {
  ProofParams a = theorem_preset("C3").params();
  ProofParams b = a;
  b.window = Window::make(FactorKind::Cycle, 3, 15);
  EXPECT_NE(config_hash(a), config_hash(b));
  EXPECT_EQ(config_hash(a).size(), 16U);
  EXPECT_EQ(fnv1a64(""), 0xcbf29ce484222325ULL);
}

TEST(Checkpoint, RoundTripAndTamper) {
  const fs::path path = temp_file("roundtrip.ckpt");
  Checkpoint cp;
  cp.config_hash = "abc";
  cp.next_chunk = 3;
  cp.chunk_count = 10;
  cp.cursor = {2, 0, 1, 4, 2};
  cp.partial = CaseReport(2, 3);
  cp.partial.add(3, Step::HasBroadcast, 7);
  cp.partial.verdict = false;
  cp.partial.survivor = Survivor{3, ActivePattern{5, 8}};
  save_checkpoint(path, cp);
  const Checkpoint back = load_checkpoint(path);
  EXPECT_EQ(back.config_hash, "abc");
  EXPECT_EQ(back.next_chunk, 3);
  EXPECT_EQ(back.cursor, cp.cursor);
  EXPECT_EQ(back.partial, cp.partial);

  std::string text;
  {
    std::ifstream in(path);
    std::getline(in, text);
  }
  const auto at = text.find("\\\"next_chunk\\\":3");
  ASSERT_NE(at, std::string::npos);
  text.replace(at, 16, "\\\"next_chunk\\\":4");
  {
    std::ofstream out(path, std::ios::trunc);
    out << text << '\n';
  }
  EXPECT_THROW((void)load_checkpoint(path), CheckpointError);
  {
    std::ofstream out(path, std::ios::trunc);
    out << "not json";
  }
  EXPECT_THROW((void)load_checkpoint(path), CheckpointError);
  EXPECT_THROW((void)load_checkpoint((path.string() + ".missing")), CheckpointError);
}

RunResult run(const ProofParams& p, int workers, const std::string& ckpt = "", bool resume = false,
              std::optional<std::int64_t> stop = std::nullopt) {
  RunOptions o;
  o.workers = workers;
  o.checkpoint_path = ckpt;
  o.resume = resume;
  o.config_hash = config_hash(p);
  o.stop_at_chunk = stop;
  return run_proof(p, o);
}

TEST(Runner, SameReportForAnyWorkerCount) {
  for (const char* id : {"C3", "C4"}) {
    const ProofParams p = theorem_preset(id).params();
    const CaseReport ref = proved_lower_bound(p);
    for (int w : {1, 2, 8}) {
      const RunResult r = run(p, w);
      EXPECT_TRUE(r.completed);
      EXPECT_EQ(r.report, ref) << id << " workers " << w;
      EXPECT_EQ(to_csv(r.report), to_csv(ref));
    }
  }
}

TEST(Runner, SurvivorIsFirstInStreamOrder) {
  ProofParams p = theorem_preset("C3").params();
  p.mvec = MVector(std::vector<std::optional<int>>(14, std::nullopt));
  const CaseReport ref = proved_lower_bound(p);
  ASSERT_TRUE(ref.survivor.has_value());
  for (int w : {1, 3, 8}) {
    const RunResult r = run(p, w);
    EXPECT_TRUE(r.completed);
    EXPECT_EQ(r.report, ref) << "workers " << w;
  }
}

TEST(Runner, InterruptAndResume) {
  const ProofParams p = theorem_preset("C4").params();
  const RunResult whole = run(p, 2);
  const std::string ckpt = temp_file("resume.ckpt");
  for (std::int64_t stop : {std::int64_t{0}, std::int64_t{1}, whole.chunks_total / 2,
                            whole.chunks_total}) {
    const RunResult first = run(p, 3, ckpt, false, stop);
    EXPECT_EQ(first.chunks_done, stop);
    EXPECT_EQ(first.completed, stop == whole.chunks_total);
    const RunResult rest = run(p, 2, ckpt, true);
    EXPECT_TRUE(rest.completed);
    EXPECT_TRUE(rest.resumed);
    EXPECT_EQ(to_csv(rest.report, true), to_csv(whole.report, true)) << "stop " << stop;
  }
}

TEST(Runner, ResumeRejectsOtherConfig) {
  const ProofParams p = theorem_preset("C3").params();
  const std::string ckpt = temp_file("foreign.ckpt");
  (void)run(p, 1, ckpt, false, 1);
  ProofParams q = p;
  q.window = Window::make(FactorKind::Cycle, 3, 15);
  q = derive_params(q.window, BoundSpec{3, 2, {0, 1, 2}, 18});
  EXPECT_THROW((void)run(q, 1, ckpt, true), CheckpointError);
}

TEST(Runner, EmptyRange) {
  ProofParams p = theorem_preset("C3").params();
  p.s = 4;
  p.t = 3;
  const RunResult r = run(p, 2);
  EXPECT_TRUE(r.completed);
  EXPECT_TRUE(r.report.verdict);
  EXPECT_EQ(r.chunks_total, 0);
}

}  // namespace
}  // namespace bdcert
