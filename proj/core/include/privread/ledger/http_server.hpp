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

#ifndef PRIVREAD_LEDGER_HTTP_SERVER_HPP_
#define PRIVREAD_LEDGER_HTTP_SERVER_HPP_

#include <memory>
#include <string>

#include "privread/ledger/peer.hpp"

namespace privread::ledger {

// HTTP/1.1 front end for a Peer.
//   POST /channels/{name}/{evaluate|submit}/{function}  body {"args": [...]}
//   GET  /channels
//   GET  /requests   (request log, one JSON object per entry)
// Protocol errors come back as {"status":"error"} bodies, never as dropped
// connections.
class HttpServer {
 public:
  explicit HttpServer(Peer& peer);
  ~HttpServer();
  HttpServer(const HttpServer&) = delete;
  HttpServer& operator=(const HttpServer&) = delete;

  // Binds host:port; port 0 picks a free port. Returns the bound port.
  int Bind(const std::string& host, int port);
  // Blocks until Stop().
  void Listen();
  // Runs Listen() on a background thread.
  void Start();
  void Stop();

  int port() const;
  std::string BaseUrl() const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace privread::ledger

#endif  // PRIVREAD_LEDGER_HTTP_SERVER_HPP_
