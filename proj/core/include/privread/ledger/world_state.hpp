// Copyright 2026 The privread Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef PRIVREAD_LEDGER_WORLD_STATE_HPP_
#define PRIVREAD_LEDGER_WORLD_STATE_HPP_

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace privread::ledger {

inline constexpr char kKeyDatabase[] = "m_DB";
inline constexpr char kKeyCount[] = "n";
inline constexpr char kKeyRecordSlots[] = "record_s";
inline constexpr char kKeyParams[] = "bgv_params";

// "record%03d"
std::string RecordKey(std::size_t index);
bool IsRecordKey(const std::string& key);

// Raised when a persisted channel cannot be loaded; key() names the
// offending world-state key or file.
class StoreError : public std::runtime_error {
 public:
  StoreError(std::string key, const std::string& what)
      : std::runtime_error(key + ": " + what), key_(std::move(key)) {}
  const std::string& key() const { return key_; }

 private:
  std::string key_;
};

// Current key-value snapshot of a channel.
class WorldState {
 public:
  std::optional<std::string> Get(const std::string& key) const;
  void Put(const std::string& key, std::string value);
  bool Contains(const std::string& key) const { return entries_.count(key) != 0; }
  void Clear() { entries_.clear(); }
  const std::map<std::string, std::string>& entries() const { return entries_; }

  friend bool operator==(const WorldState&, const WorldState&) = default;

 private:
  std::map<std::string, std::string> entries_;
};

// Sizes of the parts of a block's write set, mirroring the storage table
// columns (m_DB, metadata, JSON view, everything else).
struct StorageBreakdown {
  std::uint64_t m_db_bytes = 0;
  std::uint64_t metadata_bytes = 0;
  std::uint64_t json_bytes = 0;
  std::uint64_t overhead_bytes = 0;
};

struct BlockRecord {
  std::uint64_t sequence = 0;
  std::string tx_id;
  std::string function;
  std::uint64_t payload_bytes = 0;
  std::string payload_sha256;
  std::string timestamp;
  StorageBreakdown breakdown;

  // One JSON line, as stored in blocks.log.
  std::string ToLine() const;
  static BlockRecord FromLine(const std::string& line);
};

// Append-only list of committed blocks.
class BlockLog {
 public:
  const BlockRecord& Append(BlockRecord record);
  const std::vector<BlockRecord>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

 private:
  std::vector<BlockRecord> blocks_;
};

// Canonical write-set encoding committed by a submit: for each (key, value)
// in key order, u32 key length, key, u32 value length, value.
std::string EncodeWriteSet(const std::map<std::string, std::string>& writes);

// SHA-256 over the canonical encodings of both structures.
std::string StateDigest(const WorldState& state, const BlockLog& log);

// On-disk layout of one channel directory:
//   m_DB.bin                 plaintext artifact
//   meta.json                n, record_s, bgv_params (decimal strings)
//   records/record%03d.json  optional JSON view
//   blocks.log               one JSON line per block
void PersistChannel(const std::filesystem::path& dir, const WorldState& state,
                    const BlockLog& log);

struct RestoredChannel {
  WorldState state;
  BlockLog log;
};

// An absent or empty directory restores to an empty channel. Throws
// StoreError naming the key whose data is missing or corrupt.
RestoredChannel RestoreChannel(const std::filesystem::path& dir);

struct StorageFootprint {
  std::uint64_t m_db_bytes = 0;
  std::uint64_t metadata_bytes = 0;
  std::uint64_t json_bytes = 0;
  std::uint64_t block_log_bytes = 0;
  // Sum of every regular file under the channel directory.
  std::uint64_t total_bytes = 0;
};

StorageFootprint MeasureFootprint(const std::filesystem::path& dir);

}  // namespace privread::ledger

#endif  // PRIVREAD_LEDGER_WORLD_STATE_HPP_
