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

#include "privread/ledger/peer.hpp"

#include <chrono>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace privread::ledger {
using nlohmann::json;

std::optional<TxType> ParseTxType(std::string_view text) {
  if (text == "evaluate") return TxType::kEvaluate;
  if (text == "submit") return TxType::kSubmit;
  return std::nullopt;
}

std::string_view TxTypeName(TxType type) {
  return type == TxType::kEvaluate ? "evaluate" : "submit";
}

std::string TxResponse::ToJson() const {
  return json{{"status", ok ? "ok" : "error"},
              {"payload", payload},
              {"detail", detail},
              {"server_us", server_us}}
      .dump();
}

TxResponse TxResponse::FromJson(std::string_view text) {
  const json j = json::parse(text);
  TxResponse r;
  const std::string status = j.at("status").get<std::string>();
  if (status != "ok" && status != "error") {
    throw std::invalid_argument("unknown response status '" + status + "'");
  }
  r.ok = status == "ok";
  r.payload = j.value("payload", "");
  r.detail = j.value("detail", "");
  r.server_us = j.value("server_us", std::int64_t{0});
  return r;
}

std::string RequestLogEntry::ToJson() const {
  return json{{"channel", channel},
              {"tx_type", tx_type},
              {"function", function},
              {"status", ok ? "ok" : "error"},
              {"request_bytes", request_bytes},
              {"response_bytes", response_bytes},
              {"server_us", server_us},
              {"ring_ops",
               {{"forward_ntt", ring_ops.forward_ntt},
                {"inverse_ntt", ring_ops.inverse_ntt},
                {"pointwise_mul", ring_ops.pointwise_mul},
                {"pointwise_add", ring_ops.pointwise_add}}}}
      .dump();
}

std::vector<ChannelConfig> DefaultChannels() {
  ChannelConfig mini;
  mini.name = "mini";
  mini.log_n = 13;
  mini.default_n = 64;
  mini.default_record_bytes = 128;
  mini.record_template = "mini";

  ChannelConfig mid = mini;
  mid.name = "mid";
  mid.log_n = 14;
  mid.default_n = 73;
  mid.default_record_bytes = 224;
  mid.record_template = "mid";

  ChannelConfig rich = mini;
  rich.name = "rich";
  rich.log_n = 15;
  rich.default_n = 128;
  rich.default_record_bytes = 256;
  rich.record_template = "rich";
  return {mini, mid, rich};
}

std::vector<ChannelConfig> ParseChannelConfigs(std::string_view json_text) {
  json j = json::parse(json_text);
  if (j.is_object()) j = j.at("channels");
  if (!j.is_array()) throw std::invalid_argument("channel config must be a JSON list");
  std::vector<ChannelConfig> out;
  for (const json& c : j) {
    ChannelConfig cfg;
    cfg.name = c.at("name").get<std::string>();
    cfg.log_n = c.value("log_n", 13);
    cfg.t = c.value("t", bgv::kDefaultPlainModulus);
    cfg.log_q = c.value("log_q", std::vector<int>{bgv::kDefaultPrimeBits});
    cfg.log_p = c.value("log_p", std::vector<int>{bgv::kDefaultPrimeBits});
    cfg.default_n = c.value("default_n", std::size_t{64});
    cfg.default_record_bytes = c.value("default_record_bytes", std::size_t{128});
    const bool known = cfg.name == "mini" || cfg.name == "mid" || cfg.name == "rich";
    cfg.record_template = c.value("template", known ? cfg.name : std::string("mini"));
    cfg.write_json_view = c.value("json_view", true);
    cfg.record_seed = c.value("seed", std::uint64_t{1});
    if (cfg.name.empty() || cfg.name.find('/') != std::string::npos) {
      throw std::invalid_argument("invalid channel name '" + cfg.name + "'");
    }
    out.push_back(std::move(cfg));
  }
  return out;
}

std::vector<ChannelConfig> LoadChannelConfigs(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read channel config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseChannelConfigs(buffer.str());
}

InitRequest ParseInitArgs(const std::vector<std::string>& args) {
  if (args.size() < 2 || args.size() > 4) {
    throw std::invalid_argument("InitLedger expects [n, record_bytes, hint?, records?]");
  }
  auto parse_size = [](const std::string& text, const char* what) {
    std::size_t pos = 0;
    unsigned long long v = 0;
    try {
      v = std::stoull(text, &pos);
    } catch (const std::exception&) {
      pos = std::string::npos;
    }
    if (pos != text.size() || text.empty() || text[0] == '-') {
      throw std::invalid_argument(std::string(what) + " must be a non-negative integer");
    }
    return static_cast<std::size_t>(v);
  };
  InitRequest request;
  request.n = parse_size(args[0], "n");
  request.record_bytes = parse_size(args[1], "record_bytes");
  if (args.size() >= 3 && !args[2].empty()) {
    const json hint = json::parse(args[2]);
    if (hint.is_number_integer()) {
      request.log_n_hint = hint.get<int>();
    } else if (hint.is_object()) {
      if (hint.contains("log_n")) request.log_n_hint = hint["log_n"].get<int>();
      if (hint.contains("t")) request.t_hint = hint["t"].get<std::uint64_t>();
    } else {
      throw std::invalid_argument("hint must be an integer or an object");
    }
  }
  if (args.size() == 4 && !args[3].empty()) {
    request.records = json::parse(args[3]).get<std::vector<std::string>>();
  }
  return request;
}

std::vector<std::string> MakeInitArgs(const InitRequest& request) {
  std::vector<std::string> args = {std::to_string(request.n),
                                   std::to_string(request.record_bytes)};
  if (request.log_n_hint || request.t_hint || request.records) {
    json hint = json::object();
    if (request.log_n_hint) hint["log_n"] = *request.log_n_hint;
    if (request.t_hint) hint["t"] = *request.t_hint;
    args.push_back(hint.empty() ? std::string() : hint.dump());
  }
  if (request.records) args.push_back(json(*request.records).dump());
  return args;
}

Peer::Peer(PeerConfig config) : config_(std::move(config)) {
  for (const ChannelConfig& cfg : config_.channels) {
    std::optional<std::filesystem::path> dir;
    if (config_.data_root) dir = *config_.data_root / cfg.name;
    if (channels_.count(cfg.name) != 0) {
      throw std::invalid_argument("duplicate channel '" + cfg.name + "'");
    }
    channels_.emplace(cfg.name, std::make_unique<Channel>(cfg, dir));
  }
}

Channel* Peer::FindChannel(std::string_view name) {
  auto it = channels_.find(name);
  return it == channels_.end() ? nullptr : it->second.get();
}

const Channel* Peer::FindChannel(std::string_view name) const {
  auto it = channels_.find(name);
  return it == channels_.end() ? nullptr : it->second.get();
}

std::vector<std::string> Peer::ChannelNames() const {
  std::vector<std::string> names;
  for (const auto& [name, _] : channels_) names.push_back(name);
  return names;
}

std::string Peer::ListChannelsJson() const {
  json list = json::array();
  for (const auto& [name, channel] : channels_) {
    const ChannelConfig& cfg = channel->config();
    json entry = {{"name", name},
                  {"defaults",
                   {{"log_n", cfg.log_n},
                    {"t", cfg.t},
                    {"log_q", cfg.log_q},
                    {"log_p", cfg.log_p},
                    {"default_n", cfg.default_n},
                    {"default_record_bytes", cfg.default_record_bytes}}}};
    const auto meta = channel->TryMetadata();
    entry["initialized"] = meta.has_value();
    entry["metadata"] = meta ? json::parse(meta->ToJson()) : json(nullptr);
    if (meta && channel->data_dir()) {
      const StorageFootprint f = channel->Footprint();
      entry["storage"] = {{"m_db_bytes", f.m_db_bytes},
                          {"metadata_bytes", f.metadata_bytes},
                          {"json_bytes", f.json_bytes},
                          {"block_log_bytes", f.block_log_bytes},
                          {"total_bytes", f.total_bytes}};
    }
    list.push_back(std::move(entry));
  }
  return json{{"channels", list}}.dump();
}

TxResponse Peer::Dispatch(Channel& channel, const TxRequest& request, ring::RingOpCounts& ops) {
  TxResponse response;
  const bool is_submit = request.type == TxType::kSubmit;
  if (request.function == kInitLedger) {
    if (!is_submit) {
      response.detail = "InitLedger modifies world state and requires submit";
      return response;
    }
    const InitResult result = channel.InitLedger(ParseInitArgs(request.args));
    json payload = json::parse(result.metadata.ToJson());
    payload["block"] = json::parse(result.block.ToLine());
    response.ok = true;
    response.payload = payload.dump();
    return response;
  }
  if (request.function == kGetMetadata || request.function == kPirQuery) {
    if (is_submit) {
      response.detail = request.function + " is read-only and requires evaluate";
      return response;
    }
    if (request.function == kGetMetadata) {
      response.payload = channel.GetMetadata().ToJson();
    } else {
      if (request.args.size() != 1) {
        response.detail = "PIRQuery expects exactly one argument";
        return response;
      }
      response.payload = channel.PirQuery(request.args[0], &ops);
    }
    response.ok = true;
    return response;
  }
  response.detail = "unknown function '" + request.function + "'";
  return response;
}

TxResponse Peer::Execute(const TxRequest& request) {
  const auto start = std::chrono::steady_clock::now();
  TxResponse response;
  ring::RingOpCounts ops;
  Channel* channel = FindChannel(request.channel);
  if (channel == nullptr) {
    response.detail = "unknown channel";
  } else {
    try {
      response = Dispatch(*channel, request, ops);
    } catch (const ChaincodeError& e) {
      response = TxResponse{};
      response.detail = e.what();
    } catch (const std::exception& e) {
      response = TxResponse{};
      response.detail = std::string("invalid request: ") + e.what();
    }
  }
  response.server_us = std::chrono::duration_cast<std::chrono::microseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  if (config_.request_log) {
    RequestLogEntry entry;
    entry.channel = channel != nullptr ? request.channel : std::string("?");
    entry.tx_type = std::string(TxTypeName(request.type));
    entry.function = request.function;
    entry.ok = response.ok;
    for (const auto& arg : request.args) entry.request_bytes += arg.size();
    entry.response_bytes = response.payload.size();
    entry.server_us = response.server_us;
    entry.ring_ops = ops;
    std::lock_guard lock(log_mu_);
    log_.push_back(std::move(entry));
  }
  return response;
}

std::vector<RequestLogEntry> Peer::RequestLog() const {
  std::lock_guard lock(log_mu_);
  return log_;
}

void Peer::ClearRequestLog() {
  std::lock_guard lock(log_mu_);
  log_.clear();
}

}  // namespace privread::ledger
