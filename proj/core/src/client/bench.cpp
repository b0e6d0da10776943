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

#include "privread/client/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "privread/bgv/params.hpp"
#include "privread/bgv/scheme.hpp"
#include "privread/bgv/serialization.hpp"
#include "privread/client/peer_client.hpp"
#include "privread/client/workflow.hpp"
#include "privread/common/encoding.hpp"
#include "privread/ledger/records.hpp"
#include "privread/pir/layout.hpp"
#include "privread/pir/query.hpp"

namespace privread::client {
namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double MsSince(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

double Mean(const std::vector<double>& v) {
  return v.empty() ? 0.0 : std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

double Median(std::vector<double> v) {
  if (v.empty()) return 0.0;
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 == 1 ? v[m] : (v[m - 1] + v[m]) / 2.0;
}

std::string Fixed(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", digits, value);
  return buf;
}

double KiB(std::size_t bytes) { return static_cast<double>(bytes) / 1024.0; }

std::string PowerOfTwo(int log_n) { return "2^" + std::to_string(log_n); }

struct ChannelInfo {
  std::string name;
  std::size_t default_n = 0;
  std::size_t default_record_bytes = 0;
};

// Everything measured on one channel.
struct ChannelRun {
  ChannelInfo info;
  ledger::Metadata meta;

  std::vector<double> keygen_cold, enc_cold, eval_cold, dec_cold;
  std::vector<double> keygen_warm, enc_warm, eval_warm, dec_warm;

  std::vector<double> init_ms, meta_cold_ms, meta_warm_ms, query_cold_ms, query_warm_ms;

  std::size_t pk_bytes = 0, sk_bytes = 0, ct_q_bytes = 0, ct_r_bytes = 0, m_db_bytes = 0;
  std::size_t metadata_json_bytes = 0;
  std::vector<double> net_io_bytes;

  std::optional<ledger::StorageBreakdown> block;
  std::uint64_t block_payload_bytes = 0;
  std::optional<json> storage;

  std::vector<double> upload_total_ms, upload_server_ms;
  std::vector<double> query_crypto_cold, query_chain_cold, query_total_cold;
  std::vector<double> query_crypto_warm, query_chain_warm, query_total_warm;

  std::size_t successes = 0, failures = 0;
  bool exhaustive_run = false;
};

class Bench {
 public:
  explicit Bench(const BenchOptions& options)
      : options_(options), peer_(options.peer_url), rng_(RandomStream::FromEntropy()) {}

  BenchReport Run();

 private:
  void Log(const std::string& line) {
    if (options_.progress != nullptr) *options_.progress << line << std::endl;
  }

  std::vector<std::string> RecordsFor(const ChannelInfo& info) const {
    const std::string tmpl =
        (info.name == "mid" || info.name == "rich") ? info.name : std::string("mini");
    return ledger::GenerateRecords(info.default_n, info.default_record_bytes, tmpl, 20260101);
  }

  void MeasureCrypto(ChannelRun& run);
  void MeasureChain(ChannelRun& run, const std::vector<std::string>& records);
  void Exhaustive(ChannelRun& run, const std::vector<std::string>& records);
  void Linearity(const ChannelRun& run, BenchReport& report);

  BenchReport Tables(const std::vector<ChannelRun>& runs);

  const BenchOptions& options_;
  PeerClient peer_;
  RandomStream rng_;
  std::vector<std::vector<std::string>> linearity_rows_;
  std::vector<std::vector<std::string>> projection_rows_;
};

void Bench::MeasureCrypto(ChannelRun& run) {
  const bgv::BgvParams& params = run.meta.params;
  const bgv::ContextPtr shared = bgv::BgvContext::Create(params);
  const pir::SlotLayout layout(run.meta.n, run.meta.record_s, shared->n());
  std::vector<std::uint64_t> db(shared->n());
  for (auto& v : db) v = 1 + rng_.UniformBelow(255);
  const bgv::Plaintext db_pt = bgv::EncodeSlots(db, shared);
  const bgv::PreparedPlaintext db_prepared(db_pt);
  const std::vector<std::uint64_t> selector = pir::SelectorSlots(0, layout);

  for (int r = 0; r < options_.reps; ++r) {
    for (const bool cold : {true, false}) {
      // Cold: a freshly built context, so transform tables and the prepared
      // database are computed inside the timed region.
      const bgv::ContextPtr ctx = cold ? std::make_shared<const bgv::BgvContext>(params) : shared;
      auto t = Clock::now();
      const bgv::KeyPair keys = bgv::KeyGen(ctx, rng_);
      const double keygen = MsSince(t);

      t = Clock::now();
      const bgv::Ciphertext ct = bgv::Encrypt(keys.public_key, bgv::EncodeSlots(selector, ctx), rng_);
      const double enc = MsSince(t);

      t = Clock::now();
      const bgv::Ciphertext out =
          cold ? bgv::EvalCtPt(ct, bgv::EncodeSlots(db, ctx))
               : bgv::EvalCtPt(ct, db_prepared);
      const double eval = MsSince(t);

      t = Clock::now();
      const std::vector<std::uint64_t> slots = bgv::DecodeSlots(bgv::Decrypt(keys.secret_key, out));
      const double dec = MsSince(t);
      if (slots[0] != db[0]) Log("warning: local round trip mismatch on " + run.info.name);

      (cold ? run.keygen_cold : run.keygen_warm).push_back(keygen);
      (cold ? run.enc_cold : run.enc_warm).push_back(enc);
      (cold ? run.eval_cold : run.eval_warm).push_back(eval);
      (cold ? run.dec_cold : run.dec_warm).push_back(dec);

      if (r == 0 && !cold) {
        run.pk_bytes = bgv::Serialize(keys.public_key).size();
        run.sk_bytes = bgv::Serialize(keys.secret_key).size();
        run.m_db_bytes = bgv::Serialize(db_pt).size();
      }
    }
  }
}

void Bench::MeasureChain(ChannelRun& run, const std::vector<std::string>& records) {
  ledger::InitRequest init;
  init.n = run.info.default_n;
  init.record_bytes = run.info.default_record_bytes;
  init.records = records;
  const std::vector<std::string> init_args = ledger::MakeInitArgs(init);

  ClientSession session(peer_, std::nullopt, RandomStream::FromEntropy());
  for (int r = 0; r < options_.reps; ++r) {
    auto t = Clock::now();
    const ledger::TxResponse init_res = peer_.Submit(run.info.name, ledger::kInitLedger, init_args);
    const double upload_ms = MsSince(t);
    if (!init_res.ok) throw PeerRejected(init_res.detail);
    run.init_ms.push_back(static_cast<double>(init_res.server_us) / 1000.0);
    run.upload_total_ms.push_back(upload_ms);
    run.upload_server_ms.push_back(static_cast<double>(init_res.server_us) / 1000.0);
    if (r == 0) {
      const json payload = json::parse(init_res.payload);
      const json& b = payload.at("block");
      ledger::StorageBreakdown br;
      br.m_db_bytes = b.at("m_db_bytes").get<std::uint64_t>();
      br.metadata_bytes = b.at("metadata_bytes").get<std::uint64_t>();
      br.json_bytes = b.at("json_bytes").get<std::uint64_t>();
      br.overhead_bytes = b.at("overhead_bytes").get<std::uint64_t>();
      run.block = br;
      run.block_payload_bytes = b.at("payload_bytes").get<std::uint64_t>();
    }

    const std::int64_t index = static_cast<std::int64_t>(rng_.UniformBelow(run.info.default_n));
    const std::string& expected = records[static_cast<std::size_t>(index)];

    // Cold: first query after InitLedger and freshly generated keys.
    session.ForgetKeys();
    const QueryReport cold = session.Get(run.info.name, index);
    run.query_cold_ms.push_back(static_cast<double>(cold.server_us) / 1000.0);
    run.net_io_bytes.push_back(static_cast<double>(cold.wire_sent + cold.wire_received));
    const double cold_crypto = static_cast<double>(cold.stages.keygen_us + cold.stages.key_load_us +
                                                   cold.stages.encrypt_us + cold.stages.decrypt_us) /
                               1000.0;
    const double cold_chain =
        static_cast<double>(cold.stages.metadata_us + cold.stages.network_us) / 1000.0;
    run.query_crypto_cold.push_back(cold_crypto);
    run.query_chain_cold.push_back(cold_chain);
    run.query_total_cold.push_back(static_cast<double>(cold.elapsed_us) / 1000.0);

    ledger::TxResponse m = peer_.Evaluate(run.info.name, ledger::kGetMetadata, {});
    run.meta_cold_ms.push_back(static_cast<double>(m.server_us) / 1000.0);
    m = peer_.Evaluate(run.info.name, ledger::kGetMetadata, {});
    run.meta_warm_ms.push_back(static_cast<double>(m.server_us) / 1000.0);

    const QueryReport warm = session.Get(run.info.name, index);
    run.query_warm_ms.push_back(static_cast<double>(warm.server_us) / 1000.0);
    run.net_io_bytes.push_back(static_cast<double>(warm.wire_sent + warm.wire_received));
    run.query_crypto_warm.push_back(
        static_cast<double>(warm.stages.keygen_us + warm.stages.key_load_us +
                            warm.stages.encrypt_us + warm.stages.decrypt_us) /
        1000.0);
    run.query_chain_warm.push_back(
        static_cast<double>(warm.stages.metadata_us + warm.stages.network_us) / 1000.0);
    run.query_total_warm.push_back(static_cast<double>(warm.elapsed_us) / 1000.0);

    if (RecordToString(cold.record) != expected || RecordToString(warm.record) != expected) {
      Log("warning: " + run.info.name + " returned a wrong record for index " +
          std::to_string(index));
    }
    if (r == 0) {
      run.ct_q_bytes = cold.query_bytes;
      run.ct_r_bytes = cold.response_bytes;
      run.metadata_json_bytes = run.meta.ToJson().size();
    }
  }

  const json channels = json::parse(peer_.ListChannels()).at("channels");
  for (const json& c : channels) {
    if (c.at("name") == run.info.name && c.contains("storage")) run.storage = c.at("storage");
  }
}

void Bench::Exhaustive(ChannelRun& run, const std::vector<std::string>& records) {
  const std::size_t n = run.meta.n;
  const int workers = std::max(1, std::min<int>(options_.parallel, static_cast<int>(n)));
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> ok{0};
  std::atomic<std::size_t> bad{0};
  auto work = [&] {
    PeerClient client(options_.peer_url);
    ClientSession session(client, std::nullopt, RandomStream::FromEntropy());
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        const QueryReport rep = session.Get(run.info.name, static_cast<std::int64_t>(i));
        (RecordToString(rep.record) == records[i] ? ok : bad)++;
      } catch (const std::exception&) {
        bad++;
      }
    }
  };
  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work);
  work();
  for (auto& t : threads) t.join();
  run.successes = ok;
  run.failures = bad;
  run.exhaustive_run = true;
}

void Bench::Linearity(const ChannelRun& run, BenchReport& report) {
  ClientSession session(peer_, std::nullopt, RandomStream::FromEntropy());
  auto measure = [&](int k, double& server_ms) {
    const Traffic before = peer_.TrafficFor(ledger::kPirQuery);
    server_ms = 0.0;
    for (int q = 0; q < k; ++q) {
      const auto index = static_cast<std::int64_t>(rng_.UniformBelow(run.meta.n));
      server_ms += static_cast<double>(session.Get(run.info.name, index).server_us) / 1000.0;
    }
    const Traffic after = peer_.TrafficFor(ledger::kPirQuery);
    return static_cast<double>(after.total() - before.total());
  };
  double single_ms = 0.0;
  const double single = measure(1, single_ms);
  for (const int k : options_.linearity_counts) {
    double server_ms = 0.0;
    const double bytes = measure(k, server_ms);
    const double ratio = bytes / (single * k);
    linearity_rows_.push_back({run.info.name, std::to_string(k), Fixed(single, 0), Fixed(bytes, 0),
                               Fixed(ratio, 6), Fixed(server_ms, 1)});
    if (std::abs(ratio - 1.0) > 0.01) {
      report.warnings.push_back("bandwidth for " + std::to_string(k) +
                                " queries deviates from linear by more than 1%");
    }
  }
  const double per_query_ms = Mean(run.query_warm_ms);
  for (const int k : {100, 1000, 10000}) {
    projection_rows_.push_back({std::to_string(k), Fixed(single * k / 1e6, 1),
                                Fixed(per_query_ms * k / 60000.0, 2)});
  }
}

BenchReport Bench::Tables(const std::vector<ChannelRun>& runs) {
  BenchReport report;
  auto label = [](const ChannelRun& r) { return PowerOfTwo(r.meta.params.log_n); };

  Table t4{"table4_crypto_times.csv", "Execution time of cryptographic operations (ms, mean)",
           {"N", "variant", "reps", "KeyGen", "Enc", "Eval", "Dec", "Eval_median"}, {}};
  for (const auto& r : runs) {
    t4.rows.push_back({label(r), "cold", std::to_string(r.eval_cold.size()),
                       Fixed(Mean(r.keygen_cold), 1), Fixed(Mean(r.enc_cold), 1),
                       Fixed(Mean(r.eval_cold), 1), Fixed(Mean(r.dec_cold), 1),
                       Fixed(Median(r.eval_cold), 1)});
    t4.rows.push_back({label(r), "warm", std::to_string(r.eval_warm.size()),
                       Fixed(Mean(r.keygen_warm), 1), Fixed(Mean(r.enc_warm), 1),
                       Fixed(Mean(r.eval_warm), 1), Fixed(Mean(r.dec_warm), 1),
                       Fixed(Median(r.eval_warm), 1)});
  }

  Table t5{"table5_artifact_sizes.csv", "Size of main cryptographic artifacts (KiB, serialized)",
           {"N", "pk", "sk", "ct_q", "ct_r", "m_DB", "Metadata"}, {}};
  for (const auto& r : runs) {
    t5.rows.push_back({label(r), Fixed(KiB(r.pk_bytes), 1), Fixed(KiB(r.sk_bytes), 1),
                       Fixed(KiB(r.ct_q_bytes), 1), Fixed(KiB(r.ct_r_bytes), 1),
                       Fixed(KiB(r.m_db_bytes), 1), Fixed(KiB(r.metadata_json_bytes), 2)});
  }

  Table t6{"table6_chaincode_times.csv", "Average chaincode execution time (ms, server side)",
           {"N", "variant", "InitLedger", "GetMetadata", "PIRQuery"}, {}};
  for (const auto& r : runs) {
    t6.rows.push_back({label(r), "cold", Fixed(Mean(r.init_ms), 2), Fixed(Mean(r.meta_cold_ms), 2),
                       Fixed(Mean(r.query_cold_ms), 2)});
    t6.rows.push_back({label(r), "warm", Fixed(Mean(r.init_ms), 2), Fixed(Mean(r.meta_warm_ms), 2),
                       Fixed(Mean(r.query_warm_ms), 2)});
  }

  Table t7{"table7_pirquery_netio.csv", "Peer network I/O per PIRQuery (avg, KiB/tx, HTTP bodies)",
           {"Channel", "N", "NET_IO_KiB_per_tx"}, {}};
  for (const auto& r : runs) {
    t7.rows.push_back({r.info.name, label(r), Fixed(Mean(r.net_io_bytes) / 1024.0, 2)});
  }

  Table t8{"table8_storage.csv", "Block and world-state size per channel (KB = 1000 B)",
           {"N", "n", "m_DB", "Metadata", "JSON", "Overhead_block", "Overhead_ws", "Block",
            "World"},
           {}};
  for (const auto& r : runs) {
    if (!r.block) continue;
    const double kb = 1000.0;
    const auto& b = *r.block;
    std::string overhead_ws = "n/a";
    std::string world = "n/a";
    if (r.storage) {
      const auto total = r.storage->at("total_bytes").get<std::uint64_t>();
      const auto data = r.storage->at("m_db_bytes").get<std::uint64_t>() +
                        r.storage->at("metadata_bytes").get<std::uint64_t>() +
                        r.storage->at("json_bytes").get<std::uint64_t>();
      overhead_ws = Fixed(static_cast<double>(total - data) / kb, 3);
      world = Fixed(static_cast<double>(total) / kb, 3);
    }
    t8.rows.push_back({label(r), std::to_string(r.meta.n),
                       Fixed(static_cast<double>(b.m_db_bytes) / kb, 3),
                       Fixed(static_cast<double>(b.metadata_bytes) / kb, 3),
                       Fixed(static_cast<double>(b.json_bytes) / kb, 3),
                       Fixed(static_cast<double>(b.overhead_bytes) / kb, 3), overhead_ws,
                       Fixed(static_cast<double>(r.block_payload_bytes) / kb, 3), world});
  }

  Table t9{"table9_end_to_end.csv", "End-to-end performance (ms, mean over channels)",
           {"Workflow", "variant", "Cryptographic", "Blockchain", "Total"}, {}};
  {
    std::vector<double> up_total, up_chain, cc, ch, ct, wc, wh, wt;
    for (const auto& r : runs) {
      up_total.push_back(Mean(r.upload_total_ms));
      up_chain.push_back(Mean(r.upload_total_ms));
      cc.push_back(Mean(r.query_crypto_cold));
      ch.push_back(Mean(r.query_chain_cold));
      ct.push_back(Mean(r.query_total_cold));
      wc.push_back(Mean(r.query_crypto_warm));
      wh.push_back(Mean(r.query_chain_warm));
      wt.push_back(Mean(r.query_total_warm));
    }
    t9.rows.push_back({"DW upload", "-", "0.0", Fixed(Mean(up_chain), 1), Fixed(Mean(up_total), 1)});
    t9.rows.push_back({"DR query", "cold", Fixed(Mean(cc), 1), Fixed(Mean(ch), 1), Fixed(Mean(ct), 1)});
    t9.rows.push_back({"DR query", "warm", Fixed(Mean(wc), 1), Fixed(Mean(wh), 1), Fixed(Mean(wt), 1)});
  }

  Table tc{"correctness.csv", "Exhaustive retrieval correctness",
           {"Channel", "N", "n", "successes", "failures"}, {}};
  for (const auto& r : runs) {
    if (!r.exhaustive_run) continue;
    tc.rows.push_back({r.info.name, label(r), std::to_string(r.meta.n), std::to_string(r.successes),
                       std::to_string(r.failures)});
  }

  Table tl{"linearity.csv", "Measured bandwidth for k queries (bytes, HTTP bodies)",
           {"Channel", "k", "single_query_bytes", "k_query_bytes", "ratio", "server_ms"},
           linearity_rows_};
  Table t10{"table10_projection.csv", "Projected cost for multiple PIR queries (peer perspective)",
            {"Transactions", "Total_Bandwidth_MB", "Total_Time_min"}, projection_rows_};

  report.tables = {t4, t5, t6, t7, t8, t9, tc, tl, t10};
  return report;
}

BenchReport Bench::Run() {
  const json listing = json::parse(peer_.ListChannels()).at("channels");
  std::map<std::string, ChannelInfo> available;
  for (const json& c : listing) {
    ChannelInfo info;
    info.name = c.at("name").get<std::string>();
    info.default_n = c.at("defaults").at("default_n").get<std::size_t>();
    info.default_record_bytes = c.at("defaults").at("default_record_bytes").get<std::size_t>();
    available[info.name] = info;
  }

  std::vector<std::string> warnings;
  std::vector<ChannelRun> runs;
  for (const std::string& name : options_.channels) {
    auto it = available.find(name);
    if (it == available.end()) {
      warnings.push_back("channel '" + name + "' not served by the peer; skipped");
      Log("warning: " + warnings.back());
      continue;
    }
    ChannelRun run;
    run.info = it->second;
    const std::vector<std::string> records = RecordsFor(run.info);
    Log("[" + name + "] InitLedger n=" + std::to_string(run.info.default_n) +
        " record_bytes=" + std::to_string(run.info.default_record_bytes));
    ClientSession session(peer_, std::nullopt, RandomStream::FromEntropy());
    session.Init(name, run.info.default_n, run.info.default_record_bytes, records);
    run.meta = session.Meta(name);
    Log("[" + name + "] local cryptographic operations, " + std::to_string(options_.reps) + " reps");
    MeasureCrypto(run);
    Log("[" + name + "] chaincode timings, cold and warm");
    MeasureChain(run, records);
    if (options_.exhaustive) {
      Log("[" + name + "] exhaustive retrieval of " + std::to_string(run.meta.n) + " records");
      Exhaustive(run, records);
    }
    runs.push_back(std::move(run));
  }

  BenchReport report;
  if (!runs.empty()) {
    const ChannelRun* largest = &runs.front();
    for (const auto& r : runs) {
      if (r.meta.params.log_n > largest->meta.params.log_n) largest = &r;
    }
    Log("[" + largest->info.name + "] linearity of multi-query cost");
    BenchReport lin;
    Linearity(*largest, lin);
    warnings.insert(warnings.end(), lin.warnings.begin(), lin.warnings.end());
  }
  report = Tables(runs);
  report.warnings = warnings;

  std::ostringstream md;
  md << "# Benchmark summary\n\n"
     << "Peer: " << options_.peer_url << "; repetitions: " << options_.reps
     << "; cold = first call on fresh state, warm = repeated call.\n\n"
     << "Sizes in KiB unless a table states otherwise. Network figures count HTTP bodies of a "
        "single client-peer hop.\n";
  if (!runs.empty()) {
    const ChannelRun* largest = &runs.front();
    for (const auto& r : runs) {
      if (r.meta.params.log_n > largest->meta.params.log_n) largest = &r;
    }
    md << "Projection and linearity use channel " << largest->info.name << " ("
       << PowerOfTwo(largest->meta.params.log_n) << ").\n";
  }
  for (const auto& w : report.warnings) md << "\n> warning: " << w << "\n";
  for (const Table& t : report.tables) md << "\n## " << t.title << "\n\n" << t.ToMarkdown();
  report.summary_markdown = md.str();

  std::filesystem::create_directories(options_.out_dir);
  for (const Table& t : report.tables) {
    std::ofstream(options_.out_dir / t.file) << t.ToCsv();
  }
  std::ofstream(options_.out_dir / "summary.md") << report.summary_markdown;
  return report;
}

}  // namespace

std::string Table::ToCsv() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) out << (i ? "," : "") << cells[i];
    out << "\n";
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out.str();
}

std::string Table::ToMarkdown() const {
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    out << "|";
    for (const auto& c : cells) out << " " << c << " |";
    out << "\n";
  };
  line(header);
  out << "|";
  for (std::size_t i = 0; i < header.size(); ++i) out << " --- |";
  out << "\n";
  for (const auto& r : rows) line(r);
  return out.str();
}

BenchReport RunBench(const BenchOptions& options) { return Bench(options).Run(); }

}  // namespace privread::client
