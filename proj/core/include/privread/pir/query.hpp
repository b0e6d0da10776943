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

#ifndef PRIVREAD_PIR_QUERY_HPP_
#define PRIVREAD_PIR_QUERY_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "privread/bgv/scheme.hpp"
#include "privread/common/random.hpp"
#include "privread/pir/layout.hpp"

namespace privread::pir {

// Windowed selector: ones exactly on record i's window, zeros elsewhere.
// Throws PirError(kIndexOutOfRange) unless 0 <= i < n.
std::vector<std::uint64_t> SelectorSlots(std::int64_t index, const SlotLayout& layout);

// Encrypts the selector for record i under pk and returns the Base64 form of
// the serialized ciphertext. Its length depends only on the parameters.
std::string BuildSelector(std::int64_t index, const SlotLayout& layout,
                          const bgv::PublicKey& public_key, RandomStream& rng);

// A retrieved record, or the raw slot value when record_s == 1.
using RecoveredRecord = std::variant<std::string, std::uint64_t>;

// Reads window i of decoded slots, stopping at the first zero slot.
RecoveredRecord ExtractRecord(std::span<const std::uint64_t> slots, std::int64_t index,
                              const SlotLayout& layout);

// Decrypts a Base64 response and extracts record i. Throws PirError on a bad
// index (kIndexOutOfRange) or an unparseable response (kMalformedResponse).
RecoveredRecord DecryptResult(std::string_view response_base64, const bgv::SecretKey& secret_key,
                              std::int64_t index, const SlotLayout& layout);

}  // namespace privread::pir

#endif  // PRIVREAD_PIR_QUERY_HPP_
