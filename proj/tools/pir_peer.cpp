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

// pir-peer: serves the ledger channels over HTTP.

#include <csignal>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "privread/ledger/http_server.hpp"
#include "privread/ledger/peer.hpp"

namespace {

privread::ledger::HttpServer* g_server = nullptr;

void HandleSignal(int) {
  if (g_server != nullptr) g_server->Stop();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulated ledger peer serving private-read channels"};
  std::string config_path;
  std::string data_dir;
  std::string bind = "127.0.0.1:7051";
  bool no_request_log = false;
  app.add_option("--config", config_path, "JSON channel list (defaults: mini, mid, rich)")
      ->check(CLI::ExistingFile);
  app.add_option("--data-dir", data_dir, "Persist each channel under DIR/<channel>");
  app.add_option("--bind", bind, "host:port to listen on")->capture_default_str();
  app.add_flag("--no-request-log", no_request_log, "Do not keep the per-request log");
  CLI11_PARSE(app, argc, argv);

  const auto colon = bind.rfind(':');
  if (colon == std::string::npos) {
    std::cerr << "error: --bind expects host:port\n";
    return 2;
  }
  const std::string host = bind.substr(0, colon);
  int port = 0;
  try {
    port = std::stoi(bind.substr(colon + 1));
  } catch (const std::exception&) {
    std::cerr << "error: invalid port in --bind\n";
    return 2;
  }

  try {
    privread::ledger::PeerConfig config;
    config.channels = config_path.empty() ? privread::ledger::DefaultChannels()
                                          : privread::ledger::LoadChannelConfigs(config_path);
    if (!data_dir.empty()) config.data_root = data_dir;
    config.request_log = !no_request_log;
    privread::ledger::Peer peer(std::move(config));
    privread::ledger::HttpServer server(peer);
    const int bound = server.Bind(host, port);
    g_server = &server;
    std::signal(SIGINT, HandleSignal);
    std::signal(SIGTERM, HandleSignal);
    std::cout << "pir-peer listening on http://" << host << ":" << bound << " channels:";
    for (const auto& name : peer.ChannelNames()) std::cout << " " << name;
    std::cout << std::endl;
    server.Listen();
    g_server = nullptr;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
