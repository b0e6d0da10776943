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

#include "privread/ledger/channel.hpp"

#include <charconv>

#include <chrono>
#include <ctime>
#include <map>
#include <utility>

#include <json.hpp>

#include "privread/bgv/serialization.hpp"
#include "privread/common/encoding.hpp"
#include "privread/ledger/records.hpp"
#include "privread/pir/feasibility.hpp"
#include "privread/pir/layout.hpp"

namespace privread::ledger {
using nlohmann::json;

namespace {

std::string UtcTimestamp() {
  const auto now = std::chrono::system_clock::now();
  const std::time_t secs = std::chrono::system_clock::to_time_t(now);
  const auto micros =
      std::chrono::duration_cast<std::chrono::microseconds>(now.time_since_epoch()).count() %
      1000000;
  std::tm tm{};
  gmtime_r(&secs, &tm);
  char buf[64];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%S", &tm);
  char out[80];
  std::snprintf(out, sizeof(out), "%s.%06lldZ", buf, static_cast<long long>(micros));
  return out;
}

// World-state form of the parameter metadata: every number as a decimal string.
std::string ParamsValue(const bgv::BgvParams& params) {
  json log_q = json::array();
  for (int b : params.log_q) log_q.push_back(std::to_string(b));
  json log_p = json::array();
  for (int b : params.log_p) log_p.push_back(std::to_string(b));
  return json{{"log_n", std::to_string(params.log_n)},
              {"n", std::to_string(params.n())},
              {"log_q", log_q},
              {"log_p", log_p},
              {"t", std::to_string(params.t)}}
      .dump();
}

std::size_t ParseCount(const std::string& text, const char* key) {
  std::size_t value = 0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty()) {
    throw StoreError(key, "not a decimal integer");
  }
  return value;
}

bgv::BgvParams ParamsFromValue(const std::string& text) {
  const json j = json::parse(text);
  std::vector<int> log_q, log_p;
  for (const auto& b : j.at("log_q")) log_q.push_back(std::stoi(b.get<std::string>()));
  for (const auto& b : j.at("log_p")) log_p.push_back(std::stoi(b.get<std::string>()));
  bgv::BgvParams params = bgv::BgvParams::Make(std::stoi(j.at("log_n").get<std::string>()),
                                               std::move(log_q), std::move(log_p),
                                               std::stoull(j.at("t").get<std::string>()));
  if (params.n() != std::stoull(j.at("n").get<std::string>())) {
    throw StoreError(kKeyParams, "N does not match log N");
  }
  return params;
}

}  // namespace

std::string Metadata::ToJson() const {
  return json{{"n", n},
              {"record_s", record_s},
              {"bgv_params",
               {{"log_n", params.log_n},
                {"n", params.n()},
                {"log_q", params.log_q},
                {"log_p", params.log_p},
                {"t", params.t}}}}
      .dump();
}

Metadata Metadata::FromJson(std::string_view text) {
  const json j = json::parse(text);
  const json& p = j.at("bgv_params");
  Metadata meta;
  meta.n = j.at("n").get<std::size_t>();
  meta.record_s = j.at("record_s").get<std::size_t>();
  meta.params = bgv::BgvParams::Make(p.at("log_n").get<int>(), p.at("log_q").get<std::vector<int>>(),
                                     p.at("log_p").get<std::vector<int>>(),
                                     p.at("t").get<std::uint64_t>());
  if (meta.params.n() != p.at("n").get<std::size_t>()) {
    throw std::invalid_argument("metadata N does not match log N");
  }
  return meta;
}

Channel::Channel(ChannelConfig config, std::optional<std::filesystem::path> data_dir)
    : config_(std::move(config)), data_dir_(std::move(data_dir)) {
  if (data_dir_) {
    RestoredChannel restored = RestoreChannel(*data_dir_);
    state_ = std::move(restored.state);
    log_ = std::move(restored.log);
    // Surface a corrupt parameter or count entry at load time.
    MetadataLocked();
  }
}

InitResult Channel::InitLedger(const InitRequest& request) {
  std::lock_guard submit(submit_mu_);
  if (request.n == 0) throw ChaincodeError("n must be positive");
  if (request.record_bytes == 0) throw ChaincodeError("record bound must be positive");

  // Smallest ring holding n windows of the writer's rounded bound.
  const std::size_t bound_slots = pir::ComputeRecordSlots(request.record_bytes);
  int log_n = 0;
  if (request.log_n_hint) {
    log_n = *request.log_n_hint;
    if (log_n < pir::kSupportedLogN.front() || log_n > pir::kSupportedLogN.back()) {
      throw ChaincodeError("unsupported log N hint " + std::to_string(log_n));
    }
  } else {
    const auto selected = pir::SelectMinLogN(request.n, bound_slots);
    if (!selected) {
      throw ChaincodeError("no feasible ring: " + std::to_string(request.n) + " * " +
                           std::to_string(bound_slots) + " slots exceeds 2^" +
                           std::to_string(pir::kSupportedLogN.back()));
    }
    log_n = *selected;
  }

  bgv::BgvParams params;
  try {
    params = bgv::BgvParams::Make(log_n, config_.log_q, config_.log_p,
                                  request.t_hint.value_or(config_.t));
  } catch (const std::invalid_argument& e) {
    throw ChaincodeError(std::string("invalid parameters: ") + e.what());
  }

  std::vector<std::string> records =
      request.records ? *request.records
                      : GenerateRecords(request.n, request.record_bytes, config_.record_template,
                                        config_.record_seed);
  if (records.size() != request.n) {
    throw ChaincodeError("expected " + std::to_string(request.n) + " records, got " +
                         std::to_string(records.size()));
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].size() > request.record_bytes) {
      throw ChaincodeError("oversize record " + std::to_string(i) + ": " +
                           std::to_string(records[i].size()) + " bytes > bound " +
                           std::to_string(request.record_bytes));
    }
  }

  std::optional<pir::RecordSet> record_set;
  try {
    record_set.emplace(records);
  } catch (const pir::PirError& e) {
    throw ChaincodeError(std::string("invalid record: ") + e.what());
  }
  const std::size_t record_s = pir::ComputeRecordSlots(record_set->MaxLength());

  pir::TemplateSpec spec;
  try {
    spec = pir::TemplateSpec::ByName(config_.record_template);
  } catch (const std::invalid_argument& e) {
    throw ChaincodeError(e.what());
  }
  const pir::FeasibilityReport report = pir::CheckFeasibility(log_n, record_s, request.n, spec);
  if (!report.feasible) throw ChaincodeError("infeasible configuration: " + report.detail);

  const auto context = bgv::BgvContext::Create(params);
  const pir::SlotLayout layout(request.n, record_s, params.n());
  const bgv::Plaintext database =
      pir::EncodeDatabase(pir::PackRecords(*record_set, layout), context);
  const Bytes db_bytes = bgv::Serialize(database);

  std::map<std::string, std::string> writes;
  writes[kKeyDatabase] = std::string(db_bytes.begin(), db_bytes.end());
  writes[kKeyCount] = std::to_string(request.n);
  writes[kKeyRecordSlots] = std::to_string(record_s);
  writes[kKeyParams] = ParamsValue(params);
  StorageBreakdown breakdown;
  if (config_.write_json_view) {
    for (std::size_t i = 0; i < records.size(); ++i) {
      writes[RecordKey(i)] = records[i];
      breakdown.json_bytes += records[i].size();
    }
  }
  const std::string payload = EncodeWriteSet(writes);
  breakdown.m_db_bytes = writes[kKeyDatabase].size();
  breakdown.metadata_bytes =
      writes[kKeyCount].size() + writes[kKeyRecordSlots].size() + writes[kKeyParams].size();
  breakdown.overhead_bytes =
      payload.size() - breakdown.m_db_bytes - breakdown.metadata_bytes - breakdown.json_bytes;

  BlockRecord block;
  block.function = "InitLedger";
  block.payload_bytes = payload.size();
  block.payload_sha256 = Sha256Hex(payload);
  block.timestamp = UtcTimestamp();
  block.breakdown = breakdown;

  InitResult result;
  {
    std::unique_lock lock(state_mu_);
    block.tx_id = Sha256Hex(config_.name + "/" + std::to_string(log_.size() + 1) + "/" +
                            block.payload_sha256 + "/" + block.timestamp);
    WorldState next;
    for (auto& [key, value] : writes) next.Put(key, std::move(value));
    BlockLog next_log = log_;
    result.block = next_log.Append(block);
    if (data_dir_) PersistChannel(*data_dir_, next, next_log);
    state_ = std::move(next);
    log_ = std::move(next_log);
    EvictCache();
  }
  result.metadata = Metadata{request.n, record_s, params};
  return result;
}

std::optional<Metadata> Channel::MetadataLocked() const {
  const auto n = state_.Get(kKeyCount);
  const auto record_s = state_.Get(kKeyRecordSlots);
  const auto params = state_.Get(kKeyParams);
  if (!n || !record_s || !params) return std::nullopt;
  Metadata meta;
  meta.n = ParseCount(*n, kKeyCount);
  meta.record_s = ParseCount(*record_s, kKeyRecordSlots);
  try {
    meta.params = ParamsFromValue(*params);
  } catch (const StoreError&) {
    throw;
  } catch (const std::exception& e) {
    throw StoreError(kKeyParams, e.what());
  }
  return meta;
}

std::optional<Metadata> Channel::TryMetadata() const {
  std::shared_lock lock(state_mu_);
  return MetadataLocked();
}

Metadata Channel::GetMetadata() const {
  auto meta = TryMetadata();
  if (!meta) throw ChaincodeError("ledger not initialized");
  return *meta;
}

std::shared_ptr<const bgv::PreparedPlaintext> Channel::LoadDatabase(const Metadata& meta) const {
  std::lock_guard lock(cache_mu_);
  if (db_cache_) return db_cache_;
  const auto stored = state_.Get(kKeyDatabase);
  if (!stored) throw ChaincodeError("world state has no m_DB");
  const auto context = bgv::BgvContext::Create(meta.params);
  db_cache_ = std::make_shared<const bgv::PreparedPlaintext>(
      bgv::DeserializePlaintext(AsBytes(*stored), context));
  return db_cache_;
}

std::string Channel::PirQuery(std::string_view query_base64, ring::RingOpCounts* ops) const {
  if (query_base64.empty()) throw ChaincodeError("empty query");
  std::shared_lock lock(state_mu_);
  const auto meta = MetadataLocked();
  if (!meta) throw ChaincodeError("ledger not initialized");
  const auto context = bgv::BgvContext::Create(meta->params);
  bgv::Ciphertext query = [&] {
    try {
      return bgv::CiphertextFromBase64(query_base64, context);
    } catch (const FormatError& e) {
      throw ChaincodeError(std::string("malformed query ciphertext: ") + e.what());
    }
  }();
  const auto database = LoadDatabase(*meta);
  ring::ScopedRingOpCounter counter;
  const bgv::Ciphertext response = bgv::EvalCtPt(query, *database);
  if (ops != nullptr) *ops = counter.Delta();
  return bgv::CiphertextToBase64(response);
}

std::string Channel::Digest() const {
  std::shared_lock lock(state_mu_);
  return StateDigest(state_, log_);
}

std::size_t Channel::BlockCount() const {
  std::shared_lock lock(state_mu_);
  return log_.size();
}

std::vector<BlockRecord> Channel::Blocks() const {
  std::shared_lock lock(state_mu_);
  return log_.blocks();
}

WorldState Channel::Snapshot() const {
  std::shared_lock lock(state_mu_);
  return state_;
}

bool Channel::CacheWarm() const {
  std::lock_guard lock(cache_mu_);
  return db_cache_ != nullptr;
}

void Channel::EvictCache() const {
  std::lock_guard lock(cache_mu_);
  db_cache_.reset();
}

void Channel::Reload() {
  if (!data_dir_) return;
  std::lock_guard submit(submit_mu_);
  RestoredChannel restored = RestoreChannel(*data_dir_);
  std::unique_lock lock(state_mu_);
  state_ = std::move(restored.state);
  log_ = std::move(restored.log);
  EvictCache();
  MetadataLocked();
}

StorageFootprint Channel::Footprint() const {
  if (!data_dir_) return {};
  std::shared_lock lock(state_mu_);
  return MeasureFootprint(*data_dir_);
}

}  // namespace privread::ledger
