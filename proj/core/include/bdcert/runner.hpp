#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "bdcert/certifier.hpp"

namespace bdcert {

struct RunOptions {
  int workers = 1;
  // Empty: no snapshots.
  std::string checkpoint_path;
  bool resume = false;
  std::string config_hash;
  std::chrono::milliseconds checkpoint_every{std::chrono::seconds(30)};
  // Wall-clock limit for this session; the run stops cleanly when it expires.
  std::optional<std::chrono::milliseconds> time_limit;
  // Stop once this many chunks are merged (counted from chunk 0).
  std::optional<std::int64_t> stop_at_chunk;
  const std::atomic<bool>* cancel = nullptr;
  std::function<void(std::int64_t done, std::int64_t total)> on_progress;
};

struct RunResult {
  CaseReport report;
  bool completed = false;
  bool resumed = false;
  std::int64_t chunks_done = 0;
  std::int64_t chunks_total = 0;
  int workers = 1;
  double seconds = 0.0;
};

// Parallel proved_lower_bound. Workers pull chunks of the case stream; the
// coordinating thread folds finished chunks into the report strictly in chunk
// order, so the report never depends on scheduling. On a surviving case the
// run ends after every earlier chunk has been merged, which makes the
// reported survivor the first one in stream order.
//
// Throws CheckpointError when resuming from a missing, corrupt or foreign
// snapshot.
[[nodiscard]] RunResult run_proof(const ProofParams& params, const RunOptions& options);

}  // namespace bdcert
