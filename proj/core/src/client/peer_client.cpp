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

#include "privread/client/peer_client.hpp"

#include <map>

#include <httplib.h>
#include <json.hpp>

namespace privread::client {

struct PeerClient::Impl {
  explicit Impl(const std::string& url) : base_url(url), http(url) {
    if (!http.is_valid()) throw PeerUnavailable("invalid peer URL '" + url + "'");
    http.set_keep_alive(true);
    http.set_read_timeout(300, 0);
    http.set_write_timeout(300, 0);
  }

  std::string Get(const std::string& path) {
    auto res = http.Get(path);
    if (!res) {
      throw PeerUnavailable("GET " + base_url + path + ": " + httplib::to_string(res.error()));
    }
    if (res->status != 200) {
      throw PeerUnavailable("GET " + path + " returned HTTP " + std::to_string(res->status));
    }
    return res->body;
  }

  ledger::TxResponse Post(const std::string& channel, ledger::TxType type,
                          const std::string& function, const std::vector<std::string>& args) {
    const std::string path =
        "/channels/" + channel + "/" + std::string(ledger::TxTypeName(type)) + "/" + function;
    const std::string body = nlohmann::json{{"args", args}}.dump();
    auto res = http.Post(path, body, "application/json");
    if (!res) {
      throw PeerUnavailable("POST " + base_url + path + ": " + httplib::to_string(res.error()));
    }
    Traffic& t = traffic[function];
    t.requests += 1;
    t.bytes_sent += body.size();
    t.bytes_received += res->body.size();
    try {
      return ledger::TxResponse::FromJson(res->body);
    } catch (const std::exception& e) {
      throw PeerUnavailable("malformed peer response (HTTP " + std::to_string(res->status) +
                            "): " + e.what());
    }
  }

  std::string base_url;
  httplib::Client http;
  std::map<std::string, Traffic> traffic;
};

PeerClient::PeerClient(const std::string& base_url) : impl_(std::make_unique<Impl>(base_url)) {}
PeerClient::~PeerClient() = default;
PeerClient::PeerClient(PeerClient&&) noexcept = default;
PeerClient& PeerClient::operator=(PeerClient&&) noexcept = default;

ledger::TxResponse PeerClient::Submit(const std::string& channel, const std::string& function,
                                      const std::vector<std::string>& args) {
  return impl_->Post(channel, ledger::TxType::kSubmit, function, args);
}

ledger::TxResponse PeerClient::Evaluate(const std::string& channel, const std::string& function,
                                        const std::vector<std::string>& args) {
  return impl_->Post(channel, ledger::TxType::kEvaluate, function, args);
}

std::string PeerClient::ListChannels() { return impl_->Get("/channels"); }
std::string PeerClient::RequestLog() { return impl_->Get("/requests"); }

Traffic PeerClient::TrafficFor(const std::string& function) const {
  auto it = impl_->traffic.find(function);
  return it == impl_->traffic.end() ? Traffic{} : it->second;
}

Traffic PeerClient::TotalTraffic() const {
  Traffic sum;
  for (const auto& [_, t] : impl_->traffic) {
    sum.requests += t.requests;
    sum.bytes_sent += t.bytes_sent;
    sum.bytes_received += t.bytes_received;
  }
  return sum;
}

void PeerClient::ResetTraffic() { impl_->traffic.clear(); }

}  // namespace privread::client
