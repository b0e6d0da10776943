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

#include "privread/ledger/world_state.hpp"

#include <cstdio>
#include <fstream>
#include <regex>
#include <sstream>
#include <system_error>

#include <json.hpp>

#include "privread/bgv/serialization.hpp"
#include "privread/common/encoding.hpp"

namespace privread::ledger {
namespace fs = std::filesystem;
using nlohmann::json;

namespace {

constexpr char kDatabaseFile[] = "m_DB.bin";
constexpr char kMetaFile[] = "meta.json";
constexpr char kRecordsDir[] = "records";
constexpr char kBlockLogFile[] = "blocks.log";

void PutU32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>(v >> (8 * i)));
}

std::string ReadFile(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

// Write-then-rename so a crash never leaves a half-written file in place.
void WriteFileAtomic(const fs::path& path, const std::string& data) {
  const fs::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw std::runtime_error("short write to " + tmp.string());
  }
  fs::rename(tmp, path);
}

}  // namespace

std::string RecordKey(std::size_t index) {
  char key[32];
  std::snprintf(key, sizeof(key), "record%03zu", index);
  return key;
}

bool IsRecordKey(const std::string& key) {
  static const std::regex pattern("record[0-9]{3,}");
  return std::regex_match(key, pattern);
}

std::optional<std::string> WorldState::Get(const std::string& key) const {
  auto it = entries_.find(key);
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void WorldState::Put(const std::string& key, std::string value) {
  entries_[key] = std::move(value);
}

std::string BlockRecord::ToLine() const {
  json j = {
      {"sequence", sequence},
      {"tx_id", tx_id},
      {"function", function},
      {"payload_bytes", payload_bytes},
      {"payload_sha256", payload_sha256},
      {"timestamp", timestamp},
      {"m_db_bytes", breakdown.m_db_bytes},
      {"metadata_bytes", breakdown.metadata_bytes},
      {"json_bytes", breakdown.json_bytes},
      {"overhead_bytes", breakdown.overhead_bytes},
  };
  return j.dump();
}

BlockRecord BlockRecord::FromLine(const std::string& line) {
  const json j = json::parse(line);
  BlockRecord r;
  r.sequence = j.at("sequence").get<std::uint64_t>();
  r.tx_id = j.at("tx_id").get<std::string>();
  r.function = j.at("function").get<std::string>();
  r.payload_bytes = j.at("payload_bytes").get<std::uint64_t>();
  r.payload_sha256 = j.at("payload_sha256").get<std::string>();
  r.timestamp = j.at("timestamp").get<std::string>();
  r.breakdown.m_db_bytes = j.at("m_db_bytes").get<std::uint64_t>();
  r.breakdown.metadata_bytes = j.at("metadata_bytes").get<std::uint64_t>();
  r.breakdown.json_bytes = j.at("json_bytes").get<std::uint64_t>();
  r.breakdown.overhead_bytes = j.at("overhead_bytes").get<std::uint64_t>();
  return r;
}

const BlockRecord& BlockLog::Append(BlockRecord record) {
  record.sequence = blocks_.size() + 1;
  blocks_.push_back(std::move(record));
  return blocks_.back();
}

std::string EncodeWriteSet(const std::map<std::string, std::string>& writes) {
  std::string out;
  for (const auto& [key, value] : writes) {
    PutU32(out, static_cast<std::uint32_t>(key.size()));
    out += key;
    PutU32(out, static_cast<std::uint32_t>(value.size()));
    out += value;
  }
  return out;
}

std::string StateDigest(const WorldState& state, const BlockLog& log) {
  std::string canonical = EncodeWriteSet(state.entries());
  canonical += '\n';
  for (const auto& block : log.blocks()) canonical += block.ToLine() + "\n";
  return Sha256Hex(canonical);
}

void PersistChannel(const fs::path& dir, const WorldState& state, const BlockLog& log) {
  fs::create_directories(dir / kRecordsDir);

  json meta = json::object();
  for (const char* key : {kKeyCount, kKeyRecordSlots}) {
    if (auto v = state.Get(key)) meta[key] = *v;
  }
  if (auto v = state.Get(kKeyParams)) meta[kKeyParams] = json::parse(*v);

  if (auto db = state.Get(kKeyDatabase)) WriteFileAtomic(dir / kDatabaseFile, *db);
  WriteFileAtomic(dir / kMetaFile, meta.dump());

  for (const auto& entry : fs::directory_iterator(dir / kRecordsDir)) {
    const std::string key = entry.path().stem().string();
    if (!state.Contains(key)) fs::remove(entry.path());
  }
  for (const auto& [key, value] : state.entries()) {
    if (IsRecordKey(key)) WriteFileAtomic(dir / kRecordsDir / (key + ".json"), value);
  }

  std::string lines;
  for (const auto& block : log.blocks()) lines += block.ToLine() + "\n";
  WriteFileAtomic(dir / kBlockLogFile, lines);
}

RestoredChannel RestoreChannel(const fs::path& dir) {
  RestoredChannel restored;
  if (!fs::exists(dir / kMetaFile) && !fs::exists(dir / kDatabaseFile) &&
      !fs::exists(dir / kBlockLogFile)) {
    return restored;
  }

  json meta;
  try {
    meta = json::parse(ReadFile(dir / kMetaFile));
  } catch (const std::exception& e) {
    throw StoreError(kKeyCount, std::string("meta.json unreadable: ") + e.what());
  }
  const bool initialized = !meta.empty() || fs::exists(dir / kDatabaseFile);
  if (initialized) {
    for (const char* key : {kKeyCount, kKeyRecordSlots}) {
      if (!meta.contains(key) || !meta[key].is_string()) {
        throw StoreError(key, "missing or malformed in meta.json");
      }
      restored.state.Put(key, meta[key].get<std::string>());
    }
    if (!meta.contains(kKeyParams) || !meta[kKeyParams].is_object()) {
      throw StoreError(kKeyParams, "missing or malformed in meta.json");
    }
    restored.state.Put(kKeyParams, meta[kKeyParams].dump());

    if (!fs::exists(dir / kDatabaseFile)) throw StoreError(kKeyDatabase, "m_DB.bin is missing");
    std::string db = ReadFile(dir / kDatabaseFile);
    try {
      const auto header = bgv::ParseHeader(AsBytes(db));
      if (header.kind != bgv::ArtifactKind::kPlaintext) {
        throw FormatError("m_DB.bin does not hold a plaintext");
      }
    } catch (const FormatError& e) {
      throw StoreError(kKeyDatabase, e.what());
    }
    restored.state.Put(kKeyDatabase, std::move(db));
  }

  if (fs::exists(dir / kRecordsDir)) {
    for (const auto& entry : fs::directory_iterator(dir / kRecordsDir)) {
      const std::string key = entry.path().stem().string();
      if (entry.path().extension() != ".json" || !IsRecordKey(key)) {
        throw StoreError(entry.path().filename().string(), "unexpected file in records/");
      }
      restored.state.Put(key, ReadFile(entry.path()));
    }
  }

  if (fs::exists(dir / kBlockLogFile)) {
    std::istringstream lines(ReadFile(dir / kBlockLogFile));
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(lines, line)) {
      ++line_no;
      if (line.empty()) continue;
      try {
        const BlockRecord block = BlockRecord::FromLine(line);
        if (block.sequence != restored.log.size() + 1) throw std::runtime_error("out of sequence");
        restored.log.Append(block);
      } catch (const std::exception& e) {
        throw StoreError(kBlockLogFile, "line " + std::to_string(line_no) + ": " + e.what());
      }
    }
  }
  return restored;
}

StorageFootprint MeasureFootprint(const fs::path& dir) {
  StorageFootprint fp;
  if (!fs::exists(dir)) return fp;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (!entry.is_regular_file()) continue;
    const std::uint64_t size = entry.file_size();
    fp.total_bytes += size;
    const std::string name = entry.path().filename().string();
    if (name == kDatabaseFile) {
      fp.m_db_bytes += size;
    } else if (name == kMetaFile) {
      fp.metadata_bytes += size;
    } else if (name == kBlockLogFile) {
      fp.block_log_bytes += size;
    } else if (entry.path().parent_path().filename() == kRecordsDir) {
      fp.json_bytes += size;
    }
  }
  return fp;
}

}  // namespace privread::ledger
