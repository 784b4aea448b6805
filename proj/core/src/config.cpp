#include "bdcert/config.hpp"

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "bdcert/presets.hpp"
#include "json.hpp"

namespace bdcert {

using nlohmann::json;

namespace {

const std::set<std::string> kKeys = {
    "theorem", "row_factor", "m",        "column_target", "k",          "p",
    "a",       "c",          "n0",       "s",             "t",          "m_vector",
    "workers", "checkpoint", "report_csv", "report_json"};

int get_int(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_number_integer()) throw ConfigError(std::string("\"") + key + "\" must be an integer");
  return v.get<int>();
}

std::string get_string(const json& j, const char* key) {
  const json& v = j.at(key);
  if (!v.is_string()) throw ConfigError(std::string("\"") + key + "\" must be a string");
  return v.get<std::string>();
}

FactorKind get_kind(const json& j, const char* key) {
  try {
    return parse_factor_kind(get_string(j, key));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("\"") + key + "\": " + e.what());
  }
}

}  // namespace

ProofConfig parse_config(std::string_view json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  for (const auto& [key, _] : j.items())
    if (!kKeys.contains(key)) throw ConfigError("unknown config key \"" + key + "\"");

  ProofConfig cfg;
  if (j.contains("theorem")) cfg.theorem = get_string(j, "theorem");
  if (j.contains("row_factor")) cfg.row_factor = get_kind(j, "row_factor");
  if (j.contains("column_target")) cfg.column_target = get_kind(j, "column_target");
  for (auto [key, slot] : {std::pair{"m", &cfg.m},
                           {"k", &cfg.k},
                           {"p", &cfg.p},
                           {"a", &cfg.a},
                           {"n0", &cfg.n0},
                           {"s", &cfg.s},
                           {"t", &cfg.t},
                           {"workers", &cfg.workers}})
    if (j.contains(key)) *slot = get_int(j, key);
  if (j.contains("c")) {
    const json& v = j.at("c");
    if (!v.is_array()) throw ConfigError("\"c\" must be an array of integers");
    std::vector<int> c;
    for (const json& e : v) {
      if (!e.is_number_integer()) throw ConfigError("\"c\" must be an array of integers");
      c.push_back(e.get<int>());
    }
    cfg.c = c;
  }
  if (j.contains("m_vector")) {
    const json& v = j.at("m_vector");
    if (!v.is_array()) throw ConfigError("\"m_vector\" must be an array");
    std::vector<std::optional<int>> entries;
    for (const json& e : v) {
      if (e.is_null()) {
        entries.emplace_back();
      } else if (e.is_number_integer()) {
        entries.emplace_back(e.get<int>());
      } else {
        throw ConfigError("\"m_vector\" entries must be integers or null");
      }
    }
    cfg.m_vector = MVector(entries);
  }
  for (auto [key, slot] : {std::pair{"checkpoint", &cfg.checkpoint},
                           {"report_csv", &cfg.report_csv},
                           {"report_json", &cfg.report_json}})
    if (j.contains(key)) *slot = get_string(j, key);
  return cfg;
}

ProofConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("cannot read config " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

ResolvedConfig resolve_config(const ProofConfig& cfg, bool force) {
  FactorKind family = FactorKind::Cycle;
  std::optional<int> rows;
  std::optional<int> k;
  BoundSpec bound;
  bool have_bound = false;
  if (cfg.theorem) {
    const TheoremPreset* preset = nullptr;
    try {
      preset = &theorem_preset(*cfg.theorem);
    } catch (const std::invalid_argument& e) {
      throw ConfigError(e.what());
    }
    family = preset->family;
    rows = preset->rows;
    k = preset->k;
    bound = preset->bound;
    have_bound = true;
  }
  if (cfg.row_factor) family = *cfg.row_factor;
  if (cfg.m) rows = cfg.m;
  if (cfg.k) k = cfg.k;
  if (cfg.p) bound.period = *cfg.p;
  if (cfg.a) bound.slope = *cfg.a;
  if (cfg.c) bound.offsets = *cfg.c;
  if (cfg.n0) bound.n0 = *cfg.n0;
  have_bound = have_bound || (cfg.p && cfg.a && cfg.c && cfg.n0);

  if (!cfg.theorem && !cfg.row_factor) throw ConfigError("missing \"row_factor\" (or \"theorem\")");
  if (!rows) throw ConfigError("missing \"m\"");
  if (!k) throw ConfigError("missing \"k\"");
  if (!have_bound) throw ConfigError("bound needs all of \"p\", \"a\", \"c\", \"n0\"");
  if (cfg.column_target != FactorKind::Cycle)
    throw ConfigError("column_target must be \"cycle\"");

  ResolvedConfig out;
  try {
    validate(bound);
    const Window w = Window::make(family, *rows, *k);
    if (bound.n0 < *k + 3)
      throw std::invalid_argument("n0 must be at least k + 3 so every spliced cycle has 3 columns");
    out.derived = derive_params(w, bound);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(e.what());
  }
  out.params = out.derived;
  if (cfg.s) {
    out.params.s = *cfg.s;
    if (*cfg.s != out.derived.s)
      out.mismatches.push_back("s = " + std::to_string(*cfg.s) + ", derived " +
                               std::to_string(out.derived.s));
  }
  if (cfg.t) {
    out.params.t = *cfg.t;
    if (*cfg.t != out.derived.t)
      out.mismatches.push_back("t = " + std::to_string(*cfg.t) + ", derived " +
                               std::to_string(out.derived.t));
  }
  if (cfg.m_vector) {
    out.params.mvec = *cfg.m_vector;
    if (!(*cfg.m_vector == out.derived.mvec))
      out.mismatches.push_back("m_vector = " + cfg.m_vector->to_string() + ", derived " +
                               out.derived.mvec.to_string());
  }
  if (out.params.s < 0) throw ConfigError("s must be non-negative");
  if (!out.mismatches.empty() && !force) {
    std::string msg = "overrides disagree with the derived parameters (use --force):";
    for (const auto& m : out.mismatches) msg += "\n  " + m;
    throw ConfigError(msg);
  }
  return out;
}

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string config_hash(const ProofParams& p) {
  std::ostringstream key;
  key << "window=" << to_string(p.window.family()) << ':' << p.window.rows() << ':'
      << p.window.k() << ";bound=" << p.bound.period << ':' << p.bound.slope << ':';
  for (int c : p.bound.offsets) key << c << ',';
  key << ':' << p.bound.n0 << ";s=" << p.s << ";t=" << p.t << ";m=" << p.mvec.to_string();
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a64(key.str())));
  return buf;
}

}  // namespace bdcert
