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

#ifndef PRIVREAD_CLIENT_WORKFLOW_HPP_
#define PRIVREAD_CLIENT_WORKFLOW_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "privread/bgv/scheme.hpp"
#include "privread/client/keystore.hpp"
#include "privread/client/peer_client.hpp"
#include "privread/common/random.hpp"
#include "privread/ledger/channel.hpp"
#include "privread/pir/query.hpp"

namespace privread::client {

// The peer rejected a transaction. what() carries the peer's detail verbatim.
class PeerRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Durations in microseconds from one monotonic clock. Stages are measured
// back to back, so their sum is the total.
struct StageTimes {
  std::int64_t metadata_us = 0;
  std::int64_t key_load_us = 0;
  std::int64_t keygen_us = 0;
  std::int64_t encrypt_us = 0;
  std::int64_t network_us = 0;
  std::int64_t decrypt_us = 0;

  std::int64_t total_us() const {
    return metadata_us + key_load_us + keygen_us + encrypt_us + network_us + decrypt_us;
  }
};

// Milliseconds rounded to 0.1.
double ToReportMs(std::int64_t us);

struct QueryReport {
  std::string channel;
  std::int64_t index = 0;
  ledger::Metadata metadata;
  StageTimes stages;
  std::int64_t elapsed_us = 0;
  std::int64_t server_us = 0;
  std::size_t query_bytes = 0;
  std::size_t response_bytes = 0;
  // HTTP body bytes of the PIRQuery exchange.
  std::size_t wire_sent = 0;
  std::size_t wire_received = 0;
  bool keys_cached = false;
  pir::RecoveredRecord record;

  std::string Format() const;
};

// State shared by consecutive commands of one client: wire connection, key
// material (in memory and optionally on disk) and randomness.
class ClientSession {
 public:
  ClientSession(PeerClient& peer, std::optional<Keystore> keystore, RandomStream rng);

  PeerClient& peer() { return peer_; }
  RandomStream& rng() { return rng_; }

  ledger::Metadata Meta(const std::string& channel);
  ledger::Metadata Init(const std::string& channel, std::size_t n, std::size_t record_bytes,
                        const std::optional<std::vector<std::string>>& records = std::nullopt);

  // Private read of record index. Negative indices fail before any request;
  // indices >= n fail after the metadata fetch, before any query is sent.
  QueryReport Get(const std::string& channel, std::int64_t index);

  // Returns cached, stored, or fresh keys for context. generated and loaded,
  // when given, report which path was taken.
  const bgv::KeyPair& Keys(const bgv::ContextPtr& context, bool* generated = nullptr,
                           bool* loaded = nullptr);
  void ForgetKeys() { keys_.clear(); }

 private:
  PeerClient& peer_;
  std::optional<Keystore> keystore_;
  RandomStream rng_;
  std::map<std::string, bgv::KeyPair> keys_;
};

// Reads caller records: a JSON array of strings, or one record per line.
std::vector<std::string> LoadRecordsFile(const std::string& path);

std::string RecordToString(const pir::RecoveredRecord& record);

}  // namespace privread::client

#endif  // PRIVREAD_CLIENT_WORKFLOW_HPP_
