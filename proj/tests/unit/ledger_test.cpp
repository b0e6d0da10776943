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

#include <gtest/gtest.h>

#include <atomic>
#include <filesystem>
#include <functional>
#include <fstream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "privread/bgv/params.hpp"
#include "privread/bgv/scheme.hpp"
#include "privread/common/encoding.hpp"
#include "privread/common/random.hpp"
#include "privread/ledger/channel.hpp"
#include "privread/ledger/http_server.hpp"
#include "privread/ledger/peer.hpp"
#include "privread/ledger/records.hpp"
#include "privread/ledger/world_state.hpp"
#include "privread/pir/layout.hpp"
#include "privread/pir/query.hpp"
#include "unit/temp_dir.hpp"

namespace privread::ledger {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using privread::testing::TempDir;

ChannelConfig MiniConfig() { return DefaultChannels()[0]; }

InitRequest Init(std::size_t n, std::size_t record_bytes) {
  InitRequest r;
  r.n = n;
  r.record_bytes = record_bytes;
  return r;
}

std::string ErrorOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const std::exception& e) {
    return e.what();
  }
  return "";
}

// Client side of one private read against a channel, in process.
struct Reader {
  explicit Reader(const Metadata& meta)
      : ctx(bgv::BgvContext::Create(meta.params)),
        rng(RandomStream::FromSeed(77)),
        keys(bgv::KeyGen(ctx, rng)),
        layout(meta.n, meta.record_s, ctx->n()) {}

  std::string Query(std::int64_t i) { return pir::BuildSelector(i, layout, keys.public_key, rng); }
  std::string Read(const Channel& channel, std::int64_t i) {
    return std::get<std::string>(
        pir::DecryptResult(channel.PirQuery(Query(i)), keys.secret_key, i, layout));
  }

  bgv::ContextPtr ctx;
  RandomStream rng;
  bgv::KeyPair keys;
  pir::SlotLayout layout;
};

TEST(Records, GeneratorIsDeterministicAndBounded) {
  for (const std::string tmpl : {"mini", "mid", "rich"}) {
    const auto a = GenerateRecords(64, 128, tmpl, 5);
    const auto b = GenerateRecords(64, 128, tmpl, 5);
    EXPECT_EQ(a, b);
    EXPECT_NE(a, GenerateRecords(64, 128, tmpl, 6));
    EXPECT_EQ(a[0].size(), 128u);
    for (const auto& r : a) {
      EXPECT_LE(r.size(), 128u);
      EXPECT_GE(r.size(), 121u);
      EXPECT_EQ(r.find('\0'), std::string::npos);
      EXPECT_NO_THROW((void)json::parse(r));
    }
  }
  const auto tiny = GenerateRecords(3, 5, "mini", 1);
  for (const auto& r : tiny) {
    EXPECT_LE(r.size(), 5u);
    EXPECT_FALSE(r.empty());
  }
}

TEST(Metadata, JsonRoundTrip) {
  Metadata m{64, 128, bgv::BgvParams::Preset(13)};
  const json j = json::parse(m.ToJson());
  EXPECT_EQ(j["n"], 64);
  EXPECT_EQ(j["record_s"], 128);
  EXPECT_EQ(j["bgv_params"]["log_n"], 13);
  EXPECT_EQ(j["bgv_params"]["n"], 8192);
  EXPECT_EQ(j["bgv_params"]["log_q"], json::array({54}));
  EXPECT_EQ(j["bgv_params"]["log_p"], json::array({54}));
  EXPECT_EQ(j["bgv_params"]["t"], 65537);
  EXPECT_EQ(Metadata::FromJson(m.ToJson()), m);
}

TEST(Channel, InitDefaultMini) {
  Channel ch(MiniConfig(), std::nullopt);
  EXPECT_FALSE(ch.TryMetadata());
  const InitResult r = ch.InitLedger(Init(64, 128));
  EXPECT_EQ(r.metadata.n, 64u);
  EXPECT_EQ(r.metadata.record_s, 128u);
  EXPECT_EQ(r.metadata.params, bgv::BgvParams::Preset(13));
  EXPECT_EQ(ch.GetMetadata(), r.metadata);
  EXPECT_EQ(ch.BlockCount(), 1u);
  EXPECT_EQ(r.block.sequence, 1u);
  EXPECT_EQ(r.block.function, kInitLedger);

  const WorldState ws = ch.Snapshot();
  for (const char* key : {"m_DB", "n", "record_s", "bgv_params"}) EXPECT_TRUE(ws.Contains(key)) << key;
  EXPECT_EQ(*ws.Get("n"), "64");
  EXPECT_EQ(*ws.Get("record_s"), "128");
  EXPECT_TRUE(ws.Contains("record000"));
  EXPECT_TRUE(ws.Contains("record063"));
  EXPECT_FALSE(ws.Contains("record064"));
  EXPECT_EQ(r.block.breakdown.m_db_bytes, ws.Get("m_DB")->size());
  EXPECT_EQ(ws.Get("m_DB")->size(), 65568u);
}

TEST(Channel, AutoUpgradesRing) {
  Channel ch(MiniConfig(), std::nullopt);
  EXPECT_EQ(ch.InitLedger(Init(65, 128)).metadata.params.log_n, 14);
}

TEST(Channel, InitFailures) {
  Channel ch(MiniConfig(), std::nullopt);
  EXPECT_NE(ErrorOf([&] { ch.InitLedger(Init(300, 512)); }).find("no feasible ring"),
            std::string::npos);
  EXPECT_NE(ErrorOf([&] { ch.InitLedger(Init(64, 64)); }).find("infeasible configuration: template-minimum"),
            std::string::npos);

  InitRequest oversize = Init(2, 128);
  oversize.records = std::vector<std::string>{"ok", std::string(200, 'x')};
  EXPECT_NE(ErrorOf([&] { ch.InitLedger(oversize); }).find("oversize record 1"), std::string::npos);

  InitRequest zero = Init(2, 128);
  zero.records = std::vector<std::string>{"ok", std::string("a\0b", 3)};
  EXPECT_NE(ErrorOf([&] { ch.InitLedger(zero); }).find("invalid record"), std::string::npos);

  InitRequest hint = Init(64, 128);
  hint.log_n_hint = 12;
  EXPECT_NE(ErrorOf([&] { ch.InitLedger(hint); }).find("unsupported log N hint"), std::string::npos);

  EXPECT_EQ(ch.BlockCount(), 0u);
  EXPECT_FALSE(ch.TryMetadata());
}

TEST(Channel, HintSelectsLargerRing) {
  Channel ch(MiniConfig(), std::nullopt);
  InitRequest r = Init(64, 128);
  r.log_n_hint = 15;
  EXPECT_EQ(ch.InitLedger(r).metadata.params.log_n, 15);
}

TEST(Channel, CallerRecordsFixRecordSlots) {
  Channel ch(MiniConfig(), std::nullopt);
  InitRequest r = Init(3, 200);
  r.records = std::vector<std::string>{std::string(126, 'a'), "b", "c"};
  const Metadata meta = ch.InitLedger(r).metadata;
  EXPECT_EQ(meta.record_s, 128u);
  Reader reader(meta);
  EXPECT_EQ(reader.Read(ch, 0), std::string(126, 'a'));
  EXPECT_EQ(reader.Read(ch, 2), "c");
}

TEST(Channel, EvaluateBeforeInit) {
  Channel ch(MiniConfig(), std::nullopt);
  EXPECT_EQ(ErrorOf([&] { ch.GetMetadata(); }), "ledger not initialized");
  EXPECT_EQ(ErrorOf([&] { ch.PirQuery("AAAA"); }), "ledger not initialized");
  EXPECT_EQ(ErrorOf([&] { ch.PirQuery(""); }), "empty query");
}

TEST(Channel, QueryRetrievesStoredRecords) {
  Channel ch(MiniConfig(), std::nullopt);
  const Metadata meta = ch.InitLedger(Init(64, 128)).metadata;
  const WorldState ws = ch.Snapshot();
  Reader reader(meta);
  for (const std::int64_t i : {0, 1, 32, 63}) {
    const std::string q = reader.Query(i);
    const std::string r = ch.PirQuery(q);
    EXPECT_EQ(r.size(), q.size());
    EXPECT_EQ(std::get<std::string>(pir::DecryptResult(r, reader.keys.secret_key, i, reader.layout)),
              *ws.Get(RecordKey(static_cast<std::size_t>(i))));
  }
  EXPECT_NE(ErrorOf([&] { ch.PirQuery("!!!"); }).find("malformed query ciphertext"),
            std::string::npos);
  const auto other = bgv::BgvContext::Create(bgv::BgvParams::Preset(14));
  RandomStream rng = RandomStream::FromSeed(3);
  const auto wrong = bgv::KeyGen(other, rng);
  const std::string foreign =
      pir::BuildSelector(0, pir::SlotLayout(73, 224, other->n()), wrong.public_key, rng);
  EXPECT_NE(ErrorOf([&] { ch.PirQuery(foreign); }).find("malformed query ciphertext"),
            std::string::npos);
}

TEST(Channel, EvaluateIsPure) {
  Channel ch(MiniConfig(), std::nullopt);
  const Metadata meta = ch.InitLedger(Init(64, 128)).metadata;
  Reader reader(meta);
  const std::string before = ch.Digest();
  for (int k = 0; k < 20; ++k) {
    if (k % 2 == 0) {
      (void)ch.GetMetadata();
    } else {
      (void)ch.PirQuery(reader.Query(k));
    }
    try {
      (void)ch.PirQuery("");
    } catch (const ChaincodeError&) {
    }
  }
  EXPECT_EQ(ch.Digest(), before);
  EXPECT_EQ(ch.BlockCount(), 1u);
  ch.InitLedger(Init(64, 128));
  EXPECT_EQ(ch.BlockCount(), 2u);
}

TEST(Channel, ColdAndWarmCacheAgree) {
  Channel ch(MiniConfig(), std::nullopt);
  const Metadata meta = ch.InitLedger(Init(64, 128)).metadata;
  EXPECT_FALSE(ch.CacheWarm());
  Reader reader(meta);
  const std::string q = reader.Query(9);
  const std::string cold = ch.PirQuery(q);
  EXPECT_TRUE(ch.CacheWarm());
  const std::string warm = ch.PirQuery(q);
  EXPECT_EQ(cold, warm);
  ch.EvictCache();
  EXPECT_FALSE(ch.CacheWarm());
  EXPECT_EQ(ch.PirQuery(q), cold);
}

TEST(Channel, RingOperationCountIndependentOfIndex) {
  Channel ch(MiniConfig(), std::nullopt);
  const Metadata meta = ch.InitLedger(Init(64, 128)).metadata;
  Reader reader(meta);
  ring::RingOpCounts first;
  (void)ch.PirQuery(reader.Query(0), &first);  // warms the cache
  for (const std::int64_t i : {0, 5, 63}) {
    ring::RingOpCounts ops;
    (void)ch.PirQuery(reader.Query(i), &ops);
    EXPECT_EQ(ops, first);
  }
  EXPECT_EQ(first.forward_ntt, 2u);
}

TEST(Persistence, RestoreReproducesState) {
  TempDir dir;
  std::string digest;
  Metadata meta;
  {
    Channel ch(MiniConfig(), dir.path());
    meta = ch.InitLedger(Init(64, 128)).metadata;
    digest = ch.Digest();
  }
  EXPECT_EQ(fs::file_size(dir.path() / "m_DB.bin"), 65568u);
  EXPECT_TRUE(fs::exists(dir.path() / "meta.json"));
  EXPECT_TRUE(fs::exists(dir.path() / "blocks.log"));
  EXPECT_TRUE(fs::exists(dir.path() / "records" / "record000.json"));

  const json meta_file = json::parse(std::ifstream(dir.path() / "meta.json"));
  EXPECT_EQ(meta_file["n"], "64");
  EXPECT_EQ(meta_file["record_s"], "128");

  Channel restored(MiniConfig(), dir.path());
  EXPECT_EQ(restored.GetMetadata(), meta);
  EXPECT_EQ(restored.Digest(), digest);
  EXPECT_EQ(restored.BlockCount(), 1u);
  Reader reader(meta);
  EXPECT_EQ(reader.Read(restored, 7), *restored.Snapshot().Get("record007"));
}

TEST(Persistence, ReinitRemovesStaleRecords) {
  TempDir dir;
  Channel ch(MiniConfig(), dir.path());
  ch.InitLedger(Init(64, 128));
  ch.InitLedger(Init(10, 128));
  std::size_t files = 0;
  for (const auto& e : fs::directory_iterator(dir.path() / "records")) files += e.is_regular_file();
  EXPECT_EQ(files, 10u);
  Channel restored(MiniConfig(), dir.path());
  EXPECT_EQ(restored.GetMetadata().n, 10u);
  EXPECT_EQ(restored.BlockCount(), 2u);
}

TEST(Persistence, MissingDatabaseNamesKey) {
  TempDir dir;
  { Channel(MiniConfig(), dir.path()).InitLedger(Init(64, 128)); }
  fs::remove(dir.path() / "m_DB.bin");
  try {
    Channel ch(MiniConfig(), dir.path());
    FAIL() << "expected StoreError";
  } catch (const StoreError& e) {
    EXPECT_EQ(e.key(), "m_DB");
    EXPECT_NE(std::string(e.what()).find("m_DB"), std::string::npos);
  }
}

TEST(Persistence, CorruptFilesNameKey) {
  TempDir dir;
  { Channel(MiniConfig(), dir.path()).InitLedger(Init(64, 128)); }
  {
    std::fstream f(dir.path() / "m_DB.bin", std::ios::in | std::ios::out | std::ios::binary);
    f.seekp(0);
    f.write("XXXX", 4);
  }
  try {
    Channel ch(MiniConfig(), dir.path());
    FAIL() << "expected StoreError";
  } catch (const StoreError& e) {
    EXPECT_EQ(e.key(), "m_DB");
  }

  TempDir dir2;
  { Channel(MiniConfig(), dir2.path()).InitLedger(Init(64, 128)); }
  json meta = json::parse(std::ifstream(dir2.path() / "meta.json"));
  meta["record_s"] = "twelve";
  std::ofstream(dir2.path() / "meta.json") << meta.dump();
  try {
    Channel ch(MiniConfig(), dir2.path());
    FAIL() << "expected StoreError";
  } catch (const StoreError& e) {
    EXPECT_EQ(e.key(), "record_s");
  }

  TempDir dir3;
  { Channel(MiniConfig(), dir3.path()).InitLedger(Init(64, 128)); }
  std::ofstream(dir3.path() / "blocks.log", std::ios::app) << "{not json\n";
  try {
    Channel ch(MiniConfig(), dir3.path());
    FAIL() << "expected StoreError";
  } catch (const StoreError& e) {
    EXPECT_EQ(e.key(), "blocks.log");
  }
}

TEST(Persistence, JsonViewCanBeDisabled) {
  TempDir dir;
  ChannelConfig cfg = MiniConfig();
  cfg.write_json_view = false;
  Channel ch(cfg, dir.path());
  ch.InitLedger(Init(64, 128));
  EXPECT_FALSE(ch.Snapshot().Contains("record000"));
  const StorageFootprint f = ch.Footprint();
  EXPECT_EQ(f.json_bytes, 0u);
  EXPECT_EQ(f.m_db_bytes, 65568u);
  EXPECT_GE(f.total_bytes, f.m_db_bytes + f.metadata_bytes + f.block_log_bytes);
}

TEST(Peer, RoutesAndRejects) {
  Peer peer(PeerConfig{DefaultChannels(), std::nullopt, true});
  EXPECT_EQ(peer.ChannelNames(), (std::vector<std::string>{"mid", "mini", "rich"}));

  TxResponse r = peer.Execute({"giant", TxType::kEvaluate, kGetMetadata, {}});
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.detail, "unknown channel");

  r = peer.Execute({"mini", TxType::kEvaluate, kInitLedger, {"64", "128"}});
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.detail.find("requires submit"), std::string::npos);

  r = peer.Execute({"mini", TxType::kSubmit, kGetMetadata, {}});
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.detail.find("requires evaluate"), std::string::npos);

  r = peer.Execute({"mini", TxType::kEvaluate, "DeleteAll", {}});
  EXPECT_FALSE(r.ok);
  EXPECT_NE(r.detail.find("unknown function"), std::string::npos);

  r = peer.Execute({"mini", TxType::kSubmit, kInitLedger, {"sixty", "128"}});
  EXPECT_FALSE(r.ok);

  r = peer.Execute({"mini", TxType::kSubmit, kInitLedger, {"64", "128"}});
  ASSERT_TRUE(r.ok) << r.detail;
  EXPECT_EQ(json::parse(r.payload)["block"]["sequence"], 1);

  r = peer.Execute({"mini", TxType::kEvaluate, kGetMetadata, {}});
  ASSERT_TRUE(r.ok);
  EXPECT_EQ(Metadata::FromJson(r.payload).n, 64u);
  EXPECT_EQ(peer.FindChannel("mini")->BlockCount(), 1u);
}

TEST(Peer, InitArguments) {
  InitRequest r = ParseInitArgs({"64", "128"});
  EXPECT_EQ(r.n, 64u);
  EXPECT_FALSE(r.log_n_hint);
  r = ParseInitArgs({"64", "128", "14"});
  EXPECT_EQ(r.log_n_hint, 14);
  r = ParseInitArgs({"2", "8", R"({"log_n":15,"t":65537})", R"(["a","b"])"});
  EXPECT_EQ(r.log_n_hint, 15);
  EXPECT_EQ(r.t_hint, 65537u);
  EXPECT_EQ(r.records, (std::vector<std::string>{"a", "b"}));
  EXPECT_THROW(ParseInitArgs({"64"}), std::invalid_argument);
  EXPECT_THROW(ParseInitArgs({"-1", "128"}), std::invalid_argument);
  EXPECT_THROW(ParseInitArgs({"64", "12x"}), std::invalid_argument);

  InitRequest full = Init(2, 8);
  full.records = std::vector<std::string>{"a", "b"};
  full.log_n_hint = 13;
  const InitRequest back = ParseInitArgs(MakeInitArgs(full));
  EXPECT_EQ(back.records, full.records);
  EXPECT_EQ(back.log_n_hint, 13);
}

TEST(Peer, RequestLogCarriesNoQueryContent) {
  Peer peer(PeerConfig{{MiniConfig()}, std::nullopt, true});
  ASSERT_TRUE(peer.Execute({"mini", TxType::kSubmit, kInitLedger, {"64", "128"}}).ok);
  const Metadata meta = peer.FindChannel("mini")->GetMetadata();
  Reader reader(meta);
  for (const std::int64_t i : {3, 40}) {
    ASSERT_TRUE(peer.Execute({"mini", TxType::kEvaluate, kPirQuery, {reader.Query(i)}}).ok);
  }
  const auto log = peer.RequestLog();
  ASSERT_EQ(log.size(), 3u);
  const std::set<std::string> schema = {"channel",        "tx_type",   "function", "status",
                                        "request_bytes",  "response_bytes", "server_us",
                                        "ring_ops"};
  for (const auto& entry : log) {
    const json j = json::parse(entry.ToJson());
    std::set<std::string> keys;
    for (const auto& [k, _] : j.items()) keys.insert(k);
    EXPECT_EQ(keys, schema);
  }
  EXPECT_EQ(log[1].request_bytes, log[2].request_bytes);
  EXPECT_EQ(log[1].response_bytes, log[2].response_bytes);
  EXPECT_EQ(log[1].ring_ops, log[2].ring_ops);
}

TEST(Peer, ChannelConfigFile) {
  const auto cfgs = ParseChannelConfigs(R"([
    {"name": "alpha", "log_n": 14, "t": 65537, "log_q": [54], "log_p": [54],
     "default_n": 10, "default_record_bytes": 64},
    {"name": "rich", "log_n": 15, "default_n": 128, "default_record_bytes": 256}])");
  ASSERT_EQ(cfgs.size(), 2u);
  EXPECT_EQ(cfgs[0].name, "alpha");
  EXPECT_EQ(cfgs[0].log_n, 14);
  EXPECT_EQ(cfgs[0].record_template, "mini");
  EXPECT_EQ(cfgs[1].record_template, "rich");
  EXPECT_EQ(ParseChannelConfigs(R"({"channels": []})").size(), 0u);
  EXPECT_THROW(ParseChannelConfigs(R"([{"name": "a/b"}])"), std::invalid_argument);
  EXPECT_THROW(ParseChannelConfigs("{"), std::exception);
  EXPECT_THROW(Peer(PeerConfig{{MiniConfig(), MiniConfig()}, std::nullopt, true}),
               std::invalid_argument);
}

TEST(Peer, ConcurrentReadersGetCorrectRecords) {
  Peer peer(PeerConfig{{MiniConfig()}, std::nullopt, false});
  ASSERT_TRUE(peer.Execute({"mini", TxType::kSubmit, kInitLedger, {"64", "128"}}).ok);
  Channel& ch = *peer.FindChannel("mini");
  const Metadata meta = ch.GetMetadata();
  const WorldState ws = ch.Snapshot();
  std::atomic<int> failures{0};
  std::vector<std::thread> threads;
  for (int c = 0; c < 4; ++c) {
    threads.emplace_back([&, c] {
      Reader reader(meta);
      for (int k = 0; k < 4; ++k) {
        const std::int64_t i = c * 16 + k * 3;
        const TxResponse r = peer.Execute({"mini", TxType::kEvaluate, kPirQuery, {reader.Query(i)}});
        const auto got = pir::DecryptResult(r.payload, reader.keys.secret_key, i, reader.layout);
        if (!r.ok || std::get<std::string>(got) != *ws.Get(RecordKey(static_cast<std::size_t>(i)))) {
          failures++;
        }
      }
    });
  }
  for (auto& t : threads) t.join();
  EXPECT_EQ(failures, 0);
}

TEST(Peer, SubmitExcludesConcurrentEvaluates) {
  Peer peer(PeerConfig{{MiniConfig()}, std::nullopt, false});
  ASSERT_TRUE(peer.Execute({"mini", TxType::kSubmit, kInitLedger, {"64", "128"}}).ok);
  std::atomic<bool> stop{false};
  std::atomic<int> inconsistent{0};
  std::thread reader([&] {
    while (!stop) {
      const TxResponse r = peer.Execute({"mini", TxType::kEvaluate, kGetMetadata, {}});
      if (!r.ok) {
        inconsistent++;
        continue;
      }
      const Metadata m = Metadata::FromJson(r.payload);
      if (!((m.n == 64 && m.params.log_n == 13) || (m.n == 65 && m.params.log_n == 14))) {
        inconsistent++;
      }
    }
  });
  for (int k = 0; k < 4; ++k) {
    ASSERT_TRUE(peer.Execute({"mini", TxType::kSubmit, kInitLedger, {k % 2 ? "64" : "65", "128"}}).ok);
  }
  stop = true;
  reader.join();
  EXPECT_EQ(inconsistent, 0);
}

TEST(Http, ProtocolErrorsAreResponses) {
  Peer peer(PeerConfig{{MiniConfig()}, std::nullopt, true});
  HttpServer server(peer);
  server.Bind("127.0.0.1", 0);
  server.Start();
  httplib::Client http(server.BaseUrl());

  auto res = http.Post("/channels/giant/evaluate/GetMetadata", R"({"args":[]})", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 200);
  TxResponse r = TxResponse::FromJson(res->body);
  EXPECT_FALSE(r.ok);
  EXPECT_EQ(r.detail, "unknown channel");

  res = http.Post("/channels/mini/query/GetMetadata", "{}", "application/json");
  ASSERT_TRUE(res);
  EXPECT_EQ(TxResponse::FromJson(res->body).detail, "unknown tx type");

  res = http.Post("/channels/mini/evaluate/GetMetadata", "{not json", "application/json");
  ASSERT_TRUE(res);
  EXPECT_FALSE(TxResponse::FromJson(res->body).ok);

  res = http.Post("/channels/mini/submit/InitLedger", R"({"args":["64","128"]})", "application/json");
  ASSERT_TRUE(res);
  r = TxResponse::FromJson(res->body);
  EXPECT_TRUE(r.ok) << r.detail;
  EXPECT_GE(r.server_us, 0);

  res = http.Get("/channels");
  ASSERT_TRUE(res);
  const json channels = json::parse(res->body)["channels"];
  ASSERT_EQ(channels.size(), 1u);
  EXPECT_EQ(channels[0]["name"], "mini");
  EXPECT_TRUE(channels[0]["initialized"]);
  EXPECT_EQ(channels[0]["metadata"]["bgv_params"]["log_n"], 13);

  res = http.Get("/requests");
  ASSERT_TRUE(res);
  // Requests rejected by the HTTP layer never reach the peer.
  EXPECT_EQ(json::parse(res->body)["requests"].size(), 2u);

  res = http.Get("/nowhere");
  ASSERT_TRUE(res);
  EXPECT_EQ(res->status, 404);
  EXPECT_FALSE(TxResponse::FromJson(res->body).ok);
  server.Stop();
}

}  // namespace
}  // namespace privread::ledger
