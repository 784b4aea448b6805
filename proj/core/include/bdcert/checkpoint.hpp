#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bdcert/certifier.hpp"
#include "bdcert/enumeration.hpp"

namespace bdcert {

class CheckpointError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Everything needed to continue a run: the merged report of chunks
// [0, next_chunk) and the key of the last of them.
struct Checkpoint {
  std::string config_hash;
  std::int64_t next_chunk = 0;
  std::int64_t chunk_count = 0;
  ChunkKey cursor;  // cost -1 when no chunk is done yet
  CaseReport partial;
};

// JSON with a trailing FNV-1a checksum over the body. Written to a sibling
// temp file and renamed over `path`, so a reader never sees half a snapshot.
void save_checkpoint(const std::string& path, const Checkpoint& cp);
// Throws CheckpointError for unreadable, malformed or tampered files.
[[nodiscard]] Checkpoint load_checkpoint(const std::string& path);

}  // namespace bdcert
