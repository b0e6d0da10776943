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

#ifndef PRIVREAD_LEDGER_PEER_HPP_
#define PRIVREAD_LEDGER_PEER_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "privread/ledger/channel.hpp"
#include "privread/ring/op_counter.hpp"

namespace privread::ledger {

enum class TxType { kEvaluate, kSubmit };

std::optional<TxType> ParseTxType(std::string_view text);
std::string_view TxTypeName(TxType type);

inline constexpr char kInitLedger[] = "InitLedger";
inline constexpr char kGetMetadata[] = "GetMetadata";
inline constexpr char kPirQuery[] = "PIRQuery";

struct TxRequest {
  std::string channel;
  TxType type = TxType::kEvaluate;
  std::string function;
  std::vector<std::string> args;
};

struct TxResponse {
  bool ok = false;
  std::string payload;
  std::string detail;
  std::int64_t server_us = 0;

  // {"status":"ok"|"error","payload":..,"detail":..,"server_us":..}
  std::string ToJson() const;
  static TxResponse FromJson(std::string_view text);
};

// What the peer remembers about a request. Deliberately holds no argument
// content: a query's index must not be derivable from the log.
struct RequestLogEntry {
  std::string channel;
  std::string tx_type;
  std::string function;
  bool ok = false;
  std::size_t request_bytes = 0;
  std::size_t response_bytes = 0;
  std::int64_t server_us = 0;
  ring::RingOpCounts ring_ops;

  std::string ToJson() const;
};

struct PeerConfig {
  std::vector<ChannelConfig> channels;
  // Channel c persists under data_root / c.name when set.
  std::optional<std::filesystem::path> data_root;
  bool request_log = true;
};

// Three channels matching the default parameter table: mini (2^13, 64 x 128 B),
// mid (2^14, 73 x 224 B), rich (2^15, 128 x 256 B).
std::vector<ChannelConfig> DefaultChannels();

// JSON list of {name, log_n, t, log_q, log_p, default_n, default_record_bytes}
// with optional "template", "json_view" and "seed"; or {"channels": [...]}.
std::vector<ChannelConfig> ParseChannelConfigs(std::string_view json_text);
std::vector<ChannelConfig> LoadChannelConfigs(const std::filesystem::path& path);

// Routes transactions to channels and enforces the evaluate/submit split:
// InitLedger only via submit, GetMetadata and PIRQuery only via evaluate.
class Peer {
 public:
  explicit Peer(PeerConfig config);

  TxResponse Execute(const TxRequest& request);

  Channel* FindChannel(std::string_view name);
  const Channel* FindChannel(std::string_view name) const;
  std::vector<std::string> ChannelNames() const;
  // {"channels":[{"name","initialized","metadata","defaults","storage"?}]}; storage
  // appears for initialized channels backed by a data directory.
  std::string ListChannelsJson() const;

  std::vector<RequestLogEntry> RequestLog() const;
  void ClearRequestLog();

 private:
  TxResponse Dispatch(Channel& channel, const TxRequest& request, ring::RingOpCounts& ops);

  PeerConfig config_;
  std::map<std::string, std::unique_ptr<Channel>, std::less<>> channels_;
  mutable std::mutex log_mu_;
  std::vector<RequestLogEntry> log_;
};

// Parses InitLedger arguments: [n, record_bytes, hint?, records?]. The hint is
// empty, a log N integer, or {"log_n":..,"t":..}; records is a JSON array of
// strings. Throws std::invalid_argument.
InitRequest ParseInitArgs(const std::vector<std::string>& args);
std::vector<std::string> MakeInitArgs(const InitRequest& request);

}  // namespace privread::ledger

#endif  // PRIVREAD_LEDGER_PEER_HPP_
