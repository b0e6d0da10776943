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

#include "privread/ledger/http_server.hpp"

#include <stdexcept>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace privread::ledger {
namespace {

using nlohmann::json;

void SendError(httplib::Response& res, int code, const std::string& detail) {
  TxResponse r;
  r.detail = detail;
  res.status = code;
  res.set_content(r.ToJson(), "application/json");
}

}  // namespace

struct HttpServer::Impl {
  explicit Impl(Peer& p) : peer(p) {}

  Peer& peer;
  httplib::Server server;
  std::string host = "127.0.0.1";
  int port = 0;
  std::thread thread;
};

HttpServer::HttpServer(Peer& peer) : impl_(std::make_unique<Impl>(peer)) {
  Impl* impl = impl_.get();
  impl->server.set_payload_max_length(64u << 20);

  impl->server.Post(R"(/channels/([^/]+)/([^/]+)/([^/]+))",
                    [impl](const httplib::Request& req, httplib::Response& res) {
                      TxRequest tx;
                      tx.channel = req.matches[1];
                      const auto type = ParseTxType(std::string(req.matches[2]));
                      if (!type) {
                        SendError(res, 400, "unknown tx type");
                        return;
                      }
                      tx.type = *type;
                      tx.function = req.matches[3];
                      try {
                        const json body = json::parse(req.body);
                        if (body.contains("args")) {
                          tx.args = body.at("args").get<std::vector<std::string>>();
                        }
                      } catch (const std::exception& e) {
                        SendError(res, 400, std::string("malformed request body: ") + e.what());
                        return;
                      }
                      const TxResponse out = impl->peer.Execute(tx);
                      res.status = 200;
                      res.set_content(out.ToJson(), "application/json");
                    });

  impl->server.Get("/channels", [impl](const httplib::Request&, httplib::Response& res) {
    res.set_content(impl->peer.ListChannelsJson(), "application/json");
  });

  impl->server.Get("/requests", [impl](const httplib::Request&, httplib::Response& res) {
    json list = json::array();
    for (const auto& entry : impl->peer.RequestLog()) list.push_back(json::parse(entry.ToJson()));
    res.set_content(json{{"requests", list}}.dump(), "application/json");
  });

  impl->server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (res.body.empty()) SendError(res, res.status, "not found");
  });
}

HttpServer::~HttpServer() { Stop(); }

int HttpServer::Bind(const std::string& host, int port) {
  impl_->host = host;
  if (port == 0) {
    impl_->port = impl_->server.bind_to_any_port(host);
  } else {
    impl_->port = impl_->server.bind_to_port(host, port) ? port : -1;
  }
  if (impl_->port < 0) {
    throw std::runtime_error("cannot bind " + host + ":" + std::to_string(port));
  }
  return impl_->port;
}

void HttpServer::Listen() { impl_->server.listen_after_bind(); }

void HttpServer::Start() {
  impl_->thread = std::thread([this] { Listen(); });
  impl_->server.wait_until_ready();
}

void HttpServer::Stop() {
  if (impl_ == nullptr) return;
  impl_->server.stop();
  if (impl_->thread.joinable()) impl_->thread.join();
}

int HttpServer::port() const { return impl_->port; }

std::string HttpServer::BaseUrl() const {
  return "http://" + impl_->host + ":" + std::to_string(impl_->port);
}

}  // namespace privread::ledger
