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

#ifndef PRIVREAD_CLIENT_PEER_CLIENT_HPP_
#define PRIVREAD_CLIENT_PEER_CLIENT_HPP_

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include "privread/ledger/peer.hpp"

namespace privread::client {

// The peer could not be reached or answered outside the protocol.
class PeerUnavailable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// HTTP body bytes exchanged, per function.
struct Traffic {
  std::size_t requests = 0;
  std::size_t bytes_sent = 0;
  std::size_t bytes_received = 0;

  std::size_t total() const { return bytes_sent + bytes_received; }
};

// Wire client for one peer. Not safe for concurrent use; give each thread its
// own instance.
class PeerClient {
 public:
  // base_url like "http://127.0.0.1:7051".
  explicit PeerClient(const std::string& base_url);
  ~PeerClient();
  PeerClient(PeerClient&&) noexcept;
  PeerClient& operator=(PeerClient&&) noexcept;

  ledger::TxResponse Submit(const std::string& channel, const std::string& function,
                            const std::vector<std::string>& args);
  ledger::TxResponse Evaluate(const std::string& channel, const std::string& function,
                              const std::vector<std::string>& args);

  // Raw JSON of GET /channels and GET /requests.
  std::string ListChannels();
  std::string RequestLog();

  Traffic TrafficFor(const std::string& function) const;
  Traffic TotalTraffic() const;
  void ResetTraffic();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace privread::client

#endif  // PRIVREAD_CLIENT_PEER_CLIENT_HPP_
