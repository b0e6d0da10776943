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

#include "privread/pir/query.hpp"

#include "privread/bgv/serialization.hpp"
#include "privread/common/encoding.hpp"

namespace privread::pir {
namespace {

void RequireIndex(std::int64_t index, const SlotLayout& layout) {
  if (index < 0 || static_cast<std::uint64_t>(index) >= layout.n()) {
    throw PirError(PirErrorCode::kIndexOutOfRange,
                   "index " + std::to_string(index) + " outside [0, " +
                       std::to_string(layout.n()) + ")");
  }
}

}  // namespace

std::vector<std::uint64_t> SelectorSlots(std::int64_t index, const SlotLayout& layout) {
  RequireIndex(index, layout);
  std::vector<std::uint64_t> selector(layout.n_ring(), 0);
  const auto i = static_cast<std::size_t>(index);
  for (std::size_t j = layout.WindowBegin(i); j < layout.WindowEnd(i); ++j) selector[j] = 1;
  return selector;
}

std::string BuildSelector(std::int64_t index, const SlotLayout& layout,
                          const bgv::PublicKey& public_key, RandomStream& rng) {
  const auto& context = public_key.context();
  if (layout.n_ring() != context->n()) {
    throw PirError(PirErrorCode::kCapacityExceeded, "layout ring size does not match the key");
  }
  const bgv::Plaintext selector = bgv::EncodeSlots(SelectorSlots(index, layout), context);
  return bgv::CiphertextToBase64(bgv::Encrypt(public_key, selector, rng));
}

RecoveredRecord ExtractRecord(std::span<const std::uint64_t> slots, std::int64_t index,
                              const SlotLayout& layout) {
  RequireIndex(index, layout);
  if (slots.size() < layout.n() * layout.record_s()) {
    throw PirError(PirErrorCode::kMalformedResponse, "decoded slot vector is too short");
  }
  const auto i = static_cast<std::size_t>(index);
  if (layout.record_s() == 1) return slots[layout.WindowBegin(i)];
  std::string record;
  for (std::size_t j = layout.WindowBegin(i); j < layout.WindowEnd(i); ++j) {
    if (slots[j] == 0) break;
    if (slots[j] > 0xff) {
      throw PirError(PirErrorCode::kMalformedResponse,
                     "slot " + std::to_string(j) + " does not hold a byte");
    }
    record.push_back(static_cast<char>(slots[j]));
  }
  return record;
}

RecoveredRecord DecryptResult(std::string_view response_base64, const bgv::SecretKey& secret_key,
                              std::int64_t index, const SlotLayout& layout) {
  RequireIndex(index, layout);
  if (layout.n_ring() != secret_key.context()->n()) {
    throw PirError(PirErrorCode::kCapacityExceeded, "layout ring size does not match the key");
  }
  bgv::Ciphertext response = [&] {
    try {
      return bgv::CiphertextFromBase64(response_base64, secret_key.context());
    } catch (const FormatError& e) {
      throw PirError(PirErrorCode::kMalformedResponse, e.what());
    }
  }();
  const bgv::Plaintext plain = bgv::Decrypt(secret_key, response);
  return ExtractRecord(plain.slots(), index, layout);
}

}  // namespace privread::pir
