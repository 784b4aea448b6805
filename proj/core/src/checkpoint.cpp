#include "bdcert/checkpoint.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bdcert/config.hpp"
#include "json.hpp"

namespace bdcert {

using nlohmann::json;

namespace {

constexpr const char* kFormat = "bdcert-checkpoint-1";

std::string hex(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

json body_json(const Checkpoint& cp) {
  const CaseReport& r = cp.partial;
  json rows = json::array();
  for (int c = r.s(); c <= r.t(); ++c) rows.push_back(r.row(c));
  json survivor = nullptr;
  if (r.survivor)
    survivor = {{"cost", r.survivor->cost},
                {"ones", r.survivor->pattern.ones},
                {"twos", r.survivor->pattern.twos}};
  return {{"format", kFormat},
          {"config_hash", cp.config_hash},
          {"next_chunk", cp.next_chunk},
          {"chunk_count", cp.chunk_count},
          {"cursor",
           {cp.cursor.cost, cp.cursor.first_cell, cp.cursor.first_strength, cp.cursor.second_cell,
            cp.cursor.second_strength}},
          {"s", r.s()},
          {"t", r.t()},
          {"rows", rows},
          {"verdict", r.verdict},
          {"survivor", survivor}};
}

}  // namespace

void save_checkpoint(const std::string& path, const Checkpoint& cp) {
  const std::string body = body_json(cp).dump();
  const std::string text =
      json{{"body", body}, {"checksum", hex(fnv1a64(body))}}.dump() + "\n";
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw CheckpointError("cannot write " + tmp);
    out << text;
    out.flush();
    if (!out) throw CheckpointError("write failed for " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw CheckpointError("cannot move checkpoint into place: " + ec.message());
}

Checkpoint load_checkpoint(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw CheckpointError("cannot read checkpoint " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    const json outer = json::parse(buf.str());
    const std::string body = outer.at("body").get<std::string>();
    if (outer.at("checksum").get<std::string>() != hex(fnv1a64(body)))
      throw CheckpointError("checkpoint checksum mismatch");
    const json j = json::parse(body);
    if (j.at("format") != kFormat) throw CheckpointError("unknown checkpoint format");

    Checkpoint cp;
    cp.config_hash = j.at("config_hash").get<std::string>();
    cp.next_chunk = j.at("next_chunk").get<std::int64_t>();
    cp.chunk_count = j.at("chunk_count").get<std::int64_t>();
    const auto cur = j.at("cursor").get<std::vector<int>>();
    if (cur.size() != 5) throw CheckpointError("bad cursor");
    cp.cursor = {cur[0], cur[1], cur[2], cur[3], cur[4]};
    const int s = j.at("s").get<int>();
    const int t = j.at("t").get<int>();
    cp.partial = CaseReport(s, t);
    const auto rows = j.at("rows").get<std::vector<StepCounts>>();
    if (static_cast<int>(rows.size()) != std::max(0, t - s + 1))
      throw CheckpointError("row count does not match the cost range");
    for (int c = s; c <= t; ++c)
      for (int i = 0; i < kStepCount; ++i) cp.partial.add(c, static_cast<Step>(i), rows[c - s][i]);
    cp.partial.verdict = j.at("verdict").get<bool>();
    const json& sv = j.at("survivor");
    if (!sv.is_null())
      cp.partial.survivor = Survivor{
          sv.at("cost").get<int>(),
          ActivePattern{sv.at("ones").get<std::uint64_t>(), sv.at("twos").get<std::uint64_t>()}};
    if (cp.next_chunk < 0 || cp.next_chunk > cp.chunk_count)
      throw CheckpointError("cursor outside the chunk range");
    return cp;
  } catch (const json::exception& e) {
    throw CheckpointError(std::string("malformed checkpoint: ") + e.what());
  }
}

}  // namespace bdcert
