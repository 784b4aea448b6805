#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "bdcert/certifier.hpp"

namespace bdcert {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Flat JSON proof configuration. Either "theorem" names a preset, or the
// window and bound are given explicitly:
//
//   {"row_factor": "cycle", "m": 3, "column_target": "cycle", "k": 14,
//    "p": 3, "a": 2, "c": [0, 1, 2], "n0": 17}
//
// Optional keys: s, t, m_vector (null for infinity), workers, checkpoint,
// report_csv, report_json. Keys given next to "theorem" override the preset.
struct ProofConfig {
  std::optional<std::string> theorem;
  std::optional<FactorKind> row_factor;
  std::optional<int> m;
  FactorKind column_target = FactorKind::Cycle;
  std::optional<int> k;
  std::optional<int> p;
  std::optional<int> a;
  std::optional<std::vector<int>> c;
  std::optional<int> n0;
  std::optional<int> s;
  std::optional<int> t;
  std::optional<MVector> m_vector;
  std::optional<int> workers;
  std::optional<std::string> checkpoint;
  std::optional<std::string> report_csv;
  std::optional<std::string> report_json;
};

// Throws ConfigError on malformed JSON, unknown keys, or wrong types.
[[nodiscard]] ProofConfig parse_config(std::string_view json_text);
[[nodiscard]] ProofConfig load_config(const std::string& path);

struct ResolvedConfig {
  ProofParams params;
  ProofParams derived;
  // One line per override that disagrees with the derived value.
  std::vector<std::string> mismatches;
};

// Builds the proof parameters. Overrides that disagree with the derived
// values raise ConfigError unless `force`; the column target must be a cycle,
// since the splicing argument closes the columns up into a smaller cycle.
[[nodiscard]] ResolvedConfig resolve_config(const ProofConfig& config, bool force);

[[nodiscard]] std::uint64_t fnv1a64(std::string_view bytes);
// Hash of everything that decides the case stream and its outcome. Worker
// count and file paths are not part of it.
[[nodiscard]] std::string config_hash(const ProofParams& params);

}  // namespace bdcert
