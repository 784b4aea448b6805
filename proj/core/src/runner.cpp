#include "bdcert/runner.hpp"

#include <algorithm>
#include <condition_variable>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

#include "bdcert/checkpoint.hpp"

namespace bdcert {

namespace {

using Clock = std::chrono::steady_clock;

void lower_to(std::atomic<std::int64_t>& target, std::int64_t v) {
  std::int64_t cur = target.load();
  while (v < cur && !target.compare_exchange_weak(cur, v)) {
  }
}

}  // namespace

RunResult run_proof(const ProofParams& params, const RunOptions& opt) {
  const auto start = Clock::now();
  RunResult res;
  res.workers = std::max(1, opt.workers);

  const CaseEnumerator enumerator(params.window);
  std::vector<ChunkKey> chunks;
  if (params.t >= params.s) chunks = enumerator.chunks(params.s, params.t);
  const auto total = static_cast<std::int64_t>(chunks.size());

  CaseReport merged(params.s, params.t);
  std::int64_t cursor = 0;
  if (opt.resume) {
    Checkpoint cp = load_checkpoint(opt.checkpoint_path);
    if (cp.config_hash != opt.config_hash)
      throw CheckpointError("checkpoint was written for a different config (hash " +
                            cp.config_hash + ", expected " + opt.config_hash + ")");
    if (cp.chunk_count != total || cp.partial.s() != params.s || cp.partial.t() != params.t)
      throw CheckpointError("checkpoint does not fit this case stream");
    if (cp.next_chunk > 0 && !(chunks[cp.next_chunk - 1] == cp.cursor))
      throw CheckpointError("checkpoint cursor does not match the case stream");
    merged = cp.partial;
    cursor = cp.next_chunk;
    res.resumed = true;
  }

  const auto save = [&] {
    if (opt.checkpoint_path.empty()) return;
    Checkpoint cp;
    cp.config_hash = opt.config_hash;
    cp.next_chunk = cursor;
    cp.chunk_count = total;
    cp.cursor = cursor > 0 ? chunks[cursor - 1] : ChunkKey{-1, -1, 0, -1, 0};
    cp.partial = merged;
    save_checkpoint(opt.checkpoint_path, cp);
  };

  std::int64_t limit = total;
  if (opt.stop_at_chunk) limit = std::clamp(*opt.stop_at_chunk, cursor, total);

  if (!merged.survivor && cursor < limit) {
    save();
    const std::int64_t base = cursor;
    std::vector<std::optional<CaseReport>> results(limit - base);
    std::mutex mu;
    std::condition_variable cv;
    std::atomic<std::int64_t> next{base};
    std::atomic<std::int64_t> survivor_chunk{std::numeric_limits<std::int64_t>::max()};
    std::atomic<bool> abort{false};
    const Certifier cert(params.window, params.mvec);

    const auto work = [&] {
      const Certifier local = cert;
      for (;;) {
        const std::int64_t i = next.fetch_add(1);
        if (i >= limit || i > survivor_chunk.load() || abort.load()) return;
        CaseReport part(params.s, params.t);
        bool stop = false;
        bool dropped = false;
        enumerator.for_each_in_chunk(chunks[i], [&](const WindowCase& wc) {
          if (stop) return;
          if (abort.load(std::memory_order_relaxed) ||
              i > survivor_chunk.load(std::memory_order_relaxed)) {
            stop = dropped = true;
            return;
          }
          part.add(wc.cost, Step::TotalCases);
          const CaseOutcome o = local.examine(wc.pattern);
          if (o.resolved() && o.step != Step::SubcasesHasBroadcast) {
            part.add(wc.cost, o.step);
            return;
          }
          part.add(wc.cost, Step::SubcasesHasBroadcast, o.subcases_has);
          part.add(wc.cost, Step::SubcasesInductiveArgument, o.subcases_inductive);
          if (!o.resolved()) {
            part.verdict = false;
            part.survivor = Survivor{wc.cost, wc.pattern};
            stop = true;
            lower_to(survivor_chunk, i);
          }
        });
        if (dropped) return;
        {
          const std::lock_guard lock(mu);
          results[i - base] = std::move(part);
        }
        cv.notify_one();
      }
    };

    std::vector<std::thread> pool;
    pool.reserve(res.workers);
    for (int w = 0; w < res.workers; ++w) pool.emplace_back(work);

    auto last_save = Clock::now();
    std::unique_lock lock(mu);
    for (;;) {
      while (cursor < limit && results[cursor - base]) {
        merged += *results[cursor - base];
        results[cursor - base].reset();
        ++cursor;
        if (merged.survivor) break;
      }
      if (merged.survivor || cursor >= limit) break;
      const auto now = Clock::now();
      if ((opt.cancel && opt.cancel->load()) ||
          (opt.time_limit && now - start >= *opt.time_limit))
        break;
      if (now - last_save >= opt.checkpoint_every) {
        lock.unlock();
        save();
        lock.lock();
        last_save = Clock::now();
      }
      if (opt.on_progress) opt.on_progress(cursor, total);
      cv.wait_for(lock, std::chrono::milliseconds(100));
    }
    lock.unlock();
    abort = true;
    for (auto& t : pool) t.join();
  }

  save();
  res.report = merged;
  res.chunks_done = cursor;
  res.chunks_total = total;
  res.completed = cursor == total || merged.survivor.has_value();
  res.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  if (opt.on_progress) opt.on_progress(cursor, total);
  return res;
}

}  // namespace bdcert
