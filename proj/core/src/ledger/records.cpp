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

#include "privread/ledger/records.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <stdexcept>
#include <utility>

#include "privread/common/encoding.hpp"
#include "privread/common/random.hpp"

namespace privread::ledger {
namespace {

constexpr std::array<const char*, 6> kTypes = {"file", "ipv4", "domain", "url", "email", "mutex"};
constexpr std::array<const char*, 4> kTlp = {"clear", "green", "amber", "red"};

std::string RandomHex(RandomStream& rng, std::size_t chars) {
  Bytes raw((chars + 1) / 2);
  rng.Fill(raw);
  return ToHex(raw).substr(0, chars);
}

std::string Field(const std::string& key, const std::string& value) {
  return "\"" + key + "\":\"" + value + "\"";
}

std::string Join(const std::vector<std::string>& fields) {
  std::string out = "{";
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out += ",";
    out += fields[i];
  }
  return out + "}";
}

std::string MakeRecord(std::size_t index, std::size_t target, const std::string& template_name,
                       RandomStream& rng) {
  char id[32];
  std::snprintf(id, sizeof(id), "ioc-%05zu", index);
  std::vector<std::string> fields = {
      Field("id", id),
      Field("type", kTypes[rng.UniformBelow(kTypes.size())]),
      Field("tlp", kTlp[rng.UniformBelow(kTlp.size())]),
      Field("md5", RandomHex(rng, 32)),
  };
  if (template_name == "mid") fields.push_back(Field("sha256s", RandomHex(rng, 16)));
  if (template_name == "rich") fields.push_back(Field("sha256", RandomHex(rng, 64)));

  // Drop optional fields (from the end, keeping the id) until a note fits.
  while (!fields.empty()) {
    std::vector<std::string> with_note = fields;
    with_note.push_back(Field("note", ""));
    const std::string base = Join(with_note);
    if (base.size() <= target) {
      std::string filler(target - base.size(), 'x');
      for (std::size_t i = 0; i < filler.size(); ++i) {
        filler[i] = static_cast<char>('a' + rng.UniformBelow(26));
      }
      with_note.back() = Field("note", filler);
      return Join(with_note);
    }
    if (fields.size() == 1) break;
    fields.erase(fields.end() - 1);
  }
  // Too small for JSON: a bare token of exactly the target length.
  std::string token = std::string(id) + RandomHex(rng, target);
  return token.substr(0, target);
}

}  // namespace

std::vector<std::string> GenerateRecords(std::size_t n, std::size_t max_bytes,
                                         const std::string& template_name, std::uint64_t seed) {
  if (max_bytes == 0) throw std::invalid_argument("record bound must be positive");
  RandomStream rng = RandomStream::FromSeed(seed);
  std::vector<std::string> records;
  records.reserve(n);
  const std::size_t spread = std::min<std::size_t>(8, max_bytes);
  for (std::size_t i = 0; i < n; ++i) {
    // Record 0 always hits the bound so the window is fixed by it.
    const std::size_t target = i == 0 ? max_bytes : max_bytes - rng.UniformBelow(spread);
    records.push_back(MakeRecord(i, target, template_name, rng));
  }
  return records;
}

}  // namespace privread::ledger
