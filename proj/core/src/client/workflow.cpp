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

#include "privread/client/workflow.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "privread/bgv/params.hpp"
#include "privread/bgv/serialization.hpp"
#include "privread/common/encoding.hpp"
#include "privread/pir/layout.hpp"

namespace privread::client {
namespace {

using Clock = std::chrono::steady_clock;

std::int64_t Micros(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration_cast<std::chrono::microseconds>(b - a).count();
}

std::string Ms(std::int64_t us) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", ToReportMs(us));
  return buf;
}

}  // namespace

double ToReportMs(std::int64_t us) { return std::round(static_cast<double>(us) / 100.0) / 10.0; }

std::string RecordToString(const pir::RecoveredRecord& record) {
  if (const auto* s = std::get_if<std::string>(&record)) return *s;
  return std::to_string(std::get<std::uint64_t>(record));
}

std::string QueryReport::Format() const {
  std::ostringstream out;
  out << "record: " << RecordToString(record) << "\n"
      << "channel " << channel << ", index " << index << ", n=" << metadata.n
      << ", record_s=" << metadata.record_s << ", logN=" << metadata.params.log_n << "\n"
      << "stage            ms\n"
      << "metadata   " << Ms(stages.metadata_us) << "\n"
      << "key load   " << Ms(stages.key_load_us) << "\n"
      << "keygen     " << Ms(stages.keygen_us) << (keys_cached ? " (cached)" : "") << "\n"
      << "encrypt    " << Ms(stages.encrypt_us) << "\n"
      << "network    " << Ms(stages.network_us) << " (peer " << Ms(server_us) << ")\n"
      << "decrypt    " << Ms(stages.decrypt_us) << "\n"
      << "total      " << Ms(elapsed_us) << "\n"
      << "query " << query_bytes << " B, response " << response_bytes << " B, wire "
      << wire_sent << " B sent / " << wire_received << " B received\n";
  return out.str();
}

ClientSession::ClientSession(PeerClient& peer, std::optional<Keystore> keystore,
                             RandomStream rng)
    : peer_(peer), keystore_(std::move(keystore)), rng_(std::move(rng)) {}

ledger::Metadata ClientSession::Meta(const std::string& channel) {
  const ledger::TxResponse r = peer_.Evaluate(channel, ledger::kGetMetadata, {});
  if (!r.ok) throw PeerRejected(r.detail);
  return ledger::Metadata::FromJson(r.payload);
}

ledger::Metadata ClientSession::Init(const std::string& channel, std::size_t n,
                                     std::size_t record_bytes,
                                     const std::optional<std::vector<std::string>>& records) {
  ledger::InitRequest request;
  request.n = n;
  request.record_bytes = record_bytes;
  request.records = records;
  const ledger::TxResponse r =
      peer_.Submit(channel, ledger::kInitLedger, ledger::MakeInitArgs(request));
  if (!r.ok) throw PeerRejected(r.detail);
  return ledger::Metadata::FromJson(r.payload);
}

const bgv::KeyPair& ClientSession::Keys(const bgv::ContextPtr& context, bool* generated,
                                        bool* loaded) {
  if (generated != nullptr) *generated = false;
  if (loaded != nullptr) *loaded = false;
  const std::string fp = context->params().Fingerprint();
  if (auto it = keys_.find(fp); it != keys_.end()) return it->second;
  if (keystore_) {
    KeystoreLock lock(keystore_->root());
    if (auto stored = keystore_->Load(context)) {
      if (loaded != nullptr) *loaded = true;
      return keys_.emplace(fp, std::move(*stored)).first->second;
    }
    if (generated != nullptr) *generated = true;
    return keys_.emplace(fp, keystore_->Generate(context, rng_, false)).first->second;
  }
  if (generated != nullptr) *generated = true;
  return keys_.emplace(fp, bgv::KeyGen(context, rng_)).first->second;
}

QueryReport ClientSession::Get(const std::string& channel, std::int64_t index) {
  if (index < 0) {
    throw pir::PirError(pir::PirErrorCode::kIndexOutOfRange,
                        "index " + std::to_string(index) + " is negative");
  }
  QueryReport report;
  report.channel = channel;
  report.index = index;

  const Clock::time_point t0 = Clock::now();
  report.metadata = Meta(channel);
  const Clock::time_point t1 = Clock::now();
  if (static_cast<std::uint64_t>(index) >= report.metadata.n) {
    throw pir::PirError(pir::PirErrorCode::kIndexOutOfRange,
                        "index " + std::to_string(index) + " out of range for n=" +
                            std::to_string(report.metadata.n));
  }
  const bgv::ContextPtr context = bgv::BgvContext::Create(report.metadata.params);
  const pir::SlotLayout layout(report.metadata.n, report.metadata.record_s, context->n());

  // Cached or stored keys count as key load; keygen is nonzero only when
  // fresh keys were generated.
  bool generated = false;
  const bgv::KeyPair& keys = Keys(context, &generated);
  const Clock::time_point t2 = Clock::now();
  report.keys_cached = !generated;

  const std::string query = pir::BuildSelector(index, layout, keys.public_key, rng_);
  const Clock::time_point t3 = Clock::now();

  const Traffic before = peer_.TrafficFor(ledger::kPirQuery);
  const ledger::TxResponse r = peer_.Evaluate(channel, ledger::kPirQuery, {query});
  const Clock::time_point t4 = Clock::now();
  const Traffic after = peer_.TrafficFor(ledger::kPirQuery);
  if (!r.ok) throw PeerRejected(r.detail);

  report.record = pir::DecryptResult(r.payload, keys.secret_key, index, layout);
  const Clock::time_point t5 = Clock::now();

  report.stages.metadata_us = Micros(t0, t1);
  if (generated) {
    report.stages.keygen_us = Micros(t1, t2);
  } else {
    report.stages.key_load_us = Micros(t1, t2);
  }
  report.stages.encrypt_us = Micros(t2, t3);
  report.stages.network_us = Micros(t3, t4);
  report.stages.decrypt_us = Micros(t4, t5);
  report.elapsed_us = report.stages.total_us();
  report.server_us = r.server_us;
  report.query_bytes = Base64Decode(query).size();
  report.response_bytes = Base64Decode(r.payload).size();
  report.wire_sent = after.bytes_sent - before.bytes_sent;
  report.wire_received = after.bytes_received - before.bytes_received;
  return report;
}

std::vector<std::string> LoadRecordsFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read records file " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    return nlohmann::json::parse(text).get<std::vector<std::string>>();
  }
  std::vector<std::string> records;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty()) records.push_back(line);
  }
  return records;
}

}  // namespace privread::client
