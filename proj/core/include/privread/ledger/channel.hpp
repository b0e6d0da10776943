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

#ifndef PRIVREAD_LEDGER_CHANNEL_HPP_
#define PRIVREAD_LEDGER_CHANNEL_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "privread/bgv/params.hpp"
#include "privread/bgv/scheme.hpp"
#include "privread/ledger/world_state.hpp"
#include "privread/ring/op_counter.hpp"

namespace privread::ledger {

struct ChannelConfig {
  std::string name;
  // Defaults applied by InitLedger when no hint overrides them. log_n is the
  // expected ring; InitLedger still picks the smallest ring that fits.
  int log_n = 13;
  std::uint64_t t = bgv::kDefaultPlainModulus;
  std::vector<int> log_q{bgv::kDefaultPrimeBits};
  std::vector<int> log_p{bgv::kDefaultPrimeBits};
  std::size_t default_n = 64;
  std::size_t default_record_bytes = 128;
  // Record template for synthesis and the template-minimum predicate.
  std::string record_template = "mini";
  bool write_json_view = true;
  std::uint64_t record_seed = 1;
};

// (n, record_s, parameter metadata) as held in world state.
struct Metadata {
  std::size_t n = 0;
  std::size_t record_s = 0;
  bgv::BgvParams params;

  // {"n":..,"record_s":..,"bgv_params":{"log_n":..,"n":..,"log_q":[..],"log_p":[..],"t":..}}
  std::string ToJson() const;
  static Metadata FromJson(std::string_view text);

  friend bool operator==(const Metadata&, const Metadata&) = default;
};

// A chaincode-level failure (the algorithmic "bottom" result), with a short
// reason such as "no feasible ring" or "infeasible configuration: capacity".
class ChaincodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct InitRequest {
  std::size_t n = 0;
  // Writer's upper bound on record length in bytes.
  std::size_t record_bytes = 0;
  // Overrides for the selected parameters; absent fields fall back to the
  // smallest feasible ring and the channel defaults.
  std::optional<int> log_n_hint;
  std::optional<std::uint64_t> t_hint;
  // Caller-supplied records; synthesized from the channel template otherwise.
  std::optional<std::vector<std::string>> records;
};

struct InitResult {
  Metadata metadata;
  BlockRecord block;
};

// One channel of the simulated peer: world state, block log and the three
// chaincode functions. Evaluate calls share a reader lock; InitLedger takes
// the writer lock for the whole state write.
class Channel {
 public:
  // With a data directory the channel restores from it (StoreError on a
  // corrupt store) and persists after every successful submit.
  Channel(ChannelConfig config, std::optional<std::filesystem::path> data_dir);

  const ChannelConfig& config() const { return config_; }
  const std::string& name() const { return config_.name; }

  // Submit path.
  InitResult InitLedger(const InitRequest& request);

  // Evaluate path. Both throw ChaincodeError when the ledger is uninitialized.
  Metadata GetMetadata() const;
  // Returns the Base64 response ciphertext. ops, when given, receives the
  // ring operations spent on evaluation.
  std::string PirQuery(std::string_view query_base64, ring::RingOpCounts* ops = nullptr) const;

  std::optional<Metadata> TryMetadata() const;
  std::string Digest() const;
  std::size_t BlockCount() const;
  std::vector<BlockRecord> Blocks() const;
  WorldState Snapshot() const;

  bool CacheWarm() const;
  void EvictCache() const;

  // Re-reads the persisted store, dropping in-memory state.
  void Reload();
  std::optional<std::filesystem::path> data_dir() const { return data_dir_; }
  StorageFootprint Footprint() const;

 private:
  std::optional<Metadata> MetadataLocked() const;
  std::shared_ptr<const bgv::PreparedPlaintext> LoadDatabase(const Metadata& meta) const;

  ChannelConfig config_;
  std::optional<std::filesystem::path> data_dir_;

  std::mutex submit_mu_;
  mutable std::shared_mutex state_mu_;
  WorldState state_;
  BlockLog log_;

  mutable std::mutex cache_mu_;
  mutable std::shared_ptr<const bgv::PreparedPlaintext> db_cache_;
};

}  // namespace privread::ledger

#endif  // PRIVREAD_LEDGER_CHANNEL_HPP_
