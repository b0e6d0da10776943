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

#ifndef PRIVREAD_BGV_SERIALIZATION_HPP_
#define PRIVREAD_BGV_SERIALIZATION_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>

#include "privread/bgv/scheme.hpp"
#include "privread/common/encoding.hpp"

namespace privread::bgv {

// Artifact wire format, all integers little-endian:
//
//   offset  size  field
//        0     4  magic "BGV1"
//        4     1  kind (1 = pk, 2 = sk, 3 = ct, 4 = pt)
//        5     1  log N
//        6     2  reserved, zero
//        8     8  T
//       16     8  q
//       24     8  payload length in bytes
//       32     .  payload, u64 words
//
// Payloads:
//   ct: c0[N] then c1[N], coefficients mod q
//   pt: the plaintext polynomial's coefficients mod T
//   pk: b mod q [N], b mod p [N], a mod q [N], a mod p [N]
//   sk: s mod q [N], s mod p [N]
// Keys therefore take 16 bytes per coefficient (one residue per prime of the
// Q*P basis) while ciphertexts take 8.
enum class ArtifactKind : std::uint8_t {
  kPublicKey = 1,
  kSecretKey = 2,
  kCiphertext = 3,
  kPlaintext = 4,
};

inline constexpr std::size_t kHeaderBytes = 32;
inline constexpr char kMagic[4] = {'B', 'G', 'V', '1'};

struct ArtifactHeader {
  ArtifactKind kind;
  int log_n;
  std::uint64_t t;
  std::uint64_t q;
  std::uint64_t payload_length;
};

// Validates magic, kind and declared length against the buffer. Throws FormatError.
ArtifactHeader ParseHeader(std::span<const std::uint8_t> bytes);

std::size_t PayloadBytes(ArtifactKind kind, const BgvParams& params);
std::size_t SerializedBytes(ArtifactKind kind, const BgvParams& params);

Bytes Serialize(const PublicKey& key);
Bytes Serialize(const SecretKey& key);
Bytes Serialize(const Ciphertext& ciphertext);
Bytes Serialize(const Plaintext& plaintext);

// Each throws FormatError on bad magic, wrong kind, parameter mismatch,
// truncated or oversized input, or a coefficient outside its modulus.
PublicKey DeserializePublicKey(std::span<const std::uint8_t> bytes, const ContextPtr& context);
SecretKey DeserializeSecretKey(std::span<const std::uint8_t> bytes, const ContextPtr& context);
Ciphertext DeserializeCiphertext(std::span<const std::uint8_t> bytes, const ContextPtr& context);
Plaintext DeserializePlaintext(std::span<const std::uint8_t> bytes, const ContextPtr& context);

// Base64 transport form of a serialized ciphertext.
std::string CiphertextToBase64(const Ciphertext& ciphertext);
Ciphertext CiphertextFromBase64(std::string_view text, const ContextPtr& context);

}  // namespace privread::bgv

#endif  // PRIVREAD_BGV_SERIALIZATION_HPP_
