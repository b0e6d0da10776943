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

// pirctl: data-writer and data-reader client for a pir-peer.

#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "privread/bgv/params.hpp"
#include "privread/client/bench.hpp"
#include "privread/client/keystore.hpp"
#include "privread/client/peer_client.hpp"
#include "privread/client/workflow.hpp"
#include "privread/ledger/peer.hpp"
#include "privread/pir/layout.hpp"

namespace {

using namespace privread;

constexpr char kDefaultPeer[] = "http://127.0.0.1:7051";

void PrintMetadata(const ledger::Metadata& meta) {
  std::cout << "n=" << meta.n << " record_s=" << meta.record_s
            << " logN=" << meta.params.log_n << " T=" << meta.params.t << "\n"
            << meta.ToJson() << "\n";
}

// Parameters for a channel: from the peer when one is given, otherwise from
// the default channel table.
bgv::BgvParams ChannelParams(const std::string& channel, const std::string& peer_url) {
  if (!peer_url.empty()) {
    client::PeerClient peer(peer_url);
    client::ClientSession session(peer, std::nullopt, RandomStream::FromEntropy());
    return session.Meta(channel).params;
  }
  for (const auto& cfg : ledger::DefaultChannels()) {
    if (cfg.name == channel) return bgv::BgvParams::Make(cfg.log_n, cfg.log_q, cfg.log_p, cfg.t);
  }
  throw std::invalid_argument("unknown channel '" + channel +
                              "'; pass --peer to read its parameters");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Private reads from a permissioned ledger"};
  app.require_subcommand(1);

  std::string peer_url = kDefaultPeer;
  std::string channel;
  std::string keys_dir;

  auto* init = app.add_subcommand("init", "Initialize a channel's database (submit)");
  std::size_t n = 0;
  std::size_t record_bytes = 0;
  std::string records_file;
  init->add_option("--peer", peer_url, "Peer URL")->capture_default_str();
  init->add_option("--channel", channel, "Channel name")->required();
  init->add_option("--n", n, "Number of records")->required();
  init->add_option("--record-bytes", record_bytes, "Maximum record length in bytes")->required();
  init->add_option("--records", records_file, "JSON array or one record per line")
      ->check(CLI::ExistingFile);

  auto* get = app.add_subcommand("get", "Privately read one record (evaluate)");
  std::int64_t index = 0;
  get->add_option("--peer", peer_url, "Peer URL")->capture_default_str();
  get->add_option("--channel", channel, "Channel name")->required();
  get->add_option("--index", index, "Record index")->required();
  get->add_option("--keys", keys_dir, "Keystore directory (else $PIRCTL_KEYS)");

  auto* meta = app.add_subcommand("meta", "Show a channel's public metadata");
  meta->add_option("--peer", peer_url, "Peer URL")->capture_default_str();
  meta->add_option("--channel", channel, "Channel name")->required();

  auto* keys = app.add_subcommand("keys", "Manage the client keystore");
  keys->require_subcommand(1);
  bool force = false;
  std::string keys_peer;
  auto* generate = keys->add_subcommand("generate", "Generate a key pair for a channel");
  auto* show = keys->add_subcommand("show", "Show stored keys for a channel");
  for (auto* sub : {generate, show}) {
    sub->add_option("--channel", channel, "Channel name")->required();
    sub->add_option("--keys", keys_dir, "Keystore directory (else $PIRCTL_KEYS)");
    sub->add_option("--peer", keys_peer, "Read channel parameters from this peer");
  }
  generate->add_flag("--force", force, "Overwrite existing keys");

  auto* bench = app.add_subcommand("bench", "Reproduce the measurement tables");
  client::BenchOptions bench_opts;
  bool no_exhaustive = false;
  bench->add_option("--peer", peer_url, "Peer URL")->capture_default_str();
  bench->add_option("--channels", bench_opts.channels, "Channels to measure")
      ->delimiter(',')
      ->capture_default_str();
  bench->add_option("--reps", bench_opts.reps, "Repetitions per measurement")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--out", bench_opts.out_dir, "Output directory")->capture_default_str();
  bench->add_option("--parallel", bench_opts.parallel, "Concurrent clients for the exhaustive pass")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_flag("--no-exhaustive", no_exhaustive, "Skip retrieving every record");

  CLI11_PARSE(app, argc, argv);

  std::optional<std::filesystem::path> keys_root;
  if (!keys_dir.empty()) keys_root = keys_dir;

  try {
    if (*init) {
      client::PeerClient peer(peer_url);
      client::ClientSession session(peer, std::nullopt, RandomStream::FromEntropy());
      std::optional<std::vector<std::string>> records;
      if (!records_file.empty()) records = client::LoadRecordsFile(records_file);
      PrintMetadata(session.Init(channel, n, record_bytes, records));
    } else if (*get) {
      client::PeerClient peer(peer_url);
      client::ClientSession session(
          peer, client::Keystore(client::Keystore::ResolveRoot(keys_root)),
          RandomStream::FromEntropy());
      const client::QueryReport report = session.Get(channel, index);
      std::cout << report.Format();
    } else if (*meta) {
      client::PeerClient peer(peer_url);
      client::ClientSession session(peer, std::nullopt, RandomStream::FromEntropy());
      PrintMetadata(session.Meta(channel));
    } else if (*keys) {
      client::Keystore store(client::Keystore::ResolveRoot(keys_root));
      const bgv::BgvParams params = ChannelParams(channel, keys_peer);
      if (*generate) {
        client::KeystoreLock lock(store.root());
        RandomStream rng = RandomStream::FromEntropy();
        store.Generate(bgv::BgvContext::Create(params), rng, force);
      }
      const auto info = store.Info(params);
      if (!info) {
        std::cerr << "error: no keys for channel " << channel << " in " << store.root().string()
                  << "\n";
        return 1;
      }
      std::cout << "channel     " << channel << " (logN=" << params.log_n << ")\n"
                << "fingerprint " << info->fingerprint << "\n"
                << "pk          " << info->pk_path.string() << " " << info->pk_bytes << " B\n"
                << "sk          " << info->sk_path.string() << " " << info->sk_bytes << " B"
                << (info->sk_owner_only ? " (owner only)" : " (WARNING: readable by others)")
                << "\n";
    } else if (*bench) {
      bench_opts.peer_url = peer_url;
      bench_opts.exhaustive = !no_exhaustive;
      bench_opts.progress = &std::cerr;
      const client::BenchReport report = client::RunBench(bench_opts);
      std::cout << report.summary_markdown;
      std::cerr << "wrote " << report.tables.size() << " tables and summary.md to "
                << bench_opts.out_dir.string() << "\n";
    }
  } catch (const pir::PirError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
