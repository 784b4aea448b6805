#include <benchmark/benchmark.h>

#include "bdcert/certifier.hpp"
#include "bdcert/presets.hpp"
#include "bdcert/runner.hpp"
#include "bdcert/solver.hpp"

namespace {

using namespace bdcert;

void BM_Gamma2(benchmark::State& state) {
  const Grid g = build_grid(FactorKind::Cycle, static_cast<int>(state.range(0)), FactorKind::Cycle,
                            static_cast<int>(state.range(1)));
  for (auto _ : state) benchmark::DoNotOptimize(gamma2(g));
  state.SetLabel(g.name());
}
BENCHMARK(BM_Gamma2)->Args({3, 16})->Args({4, 16})->Args({5, 12})->Args({6, 10});

void BM_EnumerateCases(benchmark::State& state) {
  const CaseEnumerator e(Window::make(FactorKind::Cycle, 5, 16));
  const int cost = static_cast<int>(state.range(0));
  std::int64_t n = 0;
  for (auto _ : state) {
    n = 0;
    e.for_each(cost, cost, [&](const WindowCase&) { ++n; });
    benchmark::DoNotOptimize(n);
  }
  state.counters["cases"] = static_cast<double>(n);
  state.counters["cases/s"] =
      benchmark::Counter(static_cast<double>(n), benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_EnumerateCases)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond);

void BM_ExamineCases(benchmark::State& state) {
  const TheoremPreset& p = theorem_preset("C5");
  const Certifier cert(p.window(), p.mvec);
  std::vector<ActivePattern> cases;
  CaseEnumerator(p.window()).for_each(5, 5, [&](const WindowCase& c) {
    if (cases.size() < 20000) cases.push_back(c.pattern);
  });
  for (auto _ : state)
    for (const auto& c : cases) benchmark::DoNotOptimize(cert.examine(c));
  state.counters["cases/s"] = benchmark::Counter(static_cast<double>(cases.size()),
                                                 benchmark::Counter::kIsIterationInvariantRate);
}
BENCHMARK(BM_ExamineCases)->Unit(benchmark::kMillisecond);

void BM_ProveTheorem(benchmark::State& state, const char* id) {
  const ProofParams params = theorem_preset(id).params();
  for (auto _ : state) {
    RunOptions opt;
    opt.workers = static_cast<int>(state.range(0));
    benchmark::DoNotOptimize(run_proof(params, opt));
  }
}
BENCHMARK_CAPTURE(BM_ProveTheorem, C3, "C3")->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_ProveTheorem, C4, "C4")->Arg(1)->Arg(2)->UseRealTime()->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
