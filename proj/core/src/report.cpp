#include "bdcert/report.hpp"

#include <sstream>

#include "json.hpp"

namespace bdcert {

using nlohmann::ordered_json;

std::string to_csv(const CaseReport& report, bool full) {
  std::ostringstream out;
  out << "step";
  for (int c = report.s(); c <= report.t(); ++c) out << ",cost_" << c;
  out << '\n';
  for (int i = 0; i < kStepCount; ++i) {
    const auto step = static_cast<Step>(i);
    bool any = step == Step::TotalCases;
    for (int c = report.s(); c <= report.t() && !any; ++c) any = report.get(c, step) != 0;
    if (!any && !full) continue;
    out << step_name(step);
    for (int c = report.s(); c <= report.t(); ++c) out << ',' << report.get(c, step);
    out << '\n';
  }
  return out.str();
}

namespace {

ordered_json mvector_json(const MVector& m) {
  ordered_json arr = ordered_json::array();
  for (const auto& e : m.entries()) arr.push_back(e ? ordered_json(*e) : ordered_json(nullptr));
  return arr;
}

ordered_json bound_json(const BoundSpec& b) {
  return {{"p", b.period}, {"a", b.slope}, {"c", b.offsets}, {"n0", b.n0}};
}

}  // namespace

std::string to_json(const ProofParams& used, const CaseReport& report, const RunInfo& info) {
  const ProofParams derived = derive_params(used.window, used.bound);
  ordered_json j;
  j["theorem"] = info.theorem;
  j["config_hash"] = info.config_hash;
  j["window"] = {{"family", to_string(used.window.family())},
                 {"rows", used.window.rows()},
                 {"k", used.window.k()}};
  j["bound"] = bound_json(used.bound);
  j["params"] = {{"s", used.s}, {"t", used.t}, {"m_vector", mvector_json(used.mvec)}};
  j["derived"] = {{"s", derived.s}, {"t", derived.t}, {"m_vector", mvector_json(derived.mvec)}};

  ordered_json costs = ordered_json::array();
  for (int c = report.s(); c <= report.t(); ++c) {
    ordered_json row;
    row["cost"] = c;
    for (int i = 0; i < kStepCount; ++i)
      row[std::string(step_name(static_cast<Step>(i)))] = report.get(c, static_cast<Step>(i));
    costs.push_back(row);
  }
  j["counts"] = costs;
  j["verdict"] = info.completed ? ordered_json(report.verdict) : ordered_json(nullptr);
  if (report.survivor) {
    j["survivor"] = {{"cost", report.survivor->cost},
                     {"matrix", format_survivor(used.window, *report.survivor)}};
  } else {
    j["survivor"] = nullptr;
  }
  j["run"] = {{"completed", info.completed},
              {"chunks_done", info.chunks_done},
              {"chunks_total", info.chunks_total},
              {"workers", info.workers},
              {"runtime_seconds", info.seconds}};
  return j.dump(2) + "\n";
}

std::vector<CellDiff> diff_golden(const CaseReport& report, const GoldenTable& golden) {
  std::vector<CellDiff> out;
  for (int i = 0; i < kStepCount; ++i) {
    const auto step = static_cast<Step>(i);
    for (int c = golden.s; c <= golden.t(); ++c)
      out.push_back({c, step, golden.get(c, step), report.get(c, step)});
  }
  return out;
}

std::string format_survivor(const Window& w, const Survivor& s) {
  return format_matrix(to_broadcast(w, s.pattern));
}

}  // namespace bdcert
