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

#include "privread/bgv/serialization.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace privread::bgv {
namespace {

using ring::Domain;
using ring::RingElement;

std::size_t PolynomialCount(ArtifactKind kind) {
  switch (kind) {
    case ArtifactKind::kPublicKey:
      return 4;
    case ArtifactKind::kSecretKey:
      return 2;
    case ArtifactKind::kCiphertext:
      return 2;
    case ArtifactKind::kPlaintext:
      return 1;
  }
  throw FormatError("unknown artifact kind");
}

Bytes BeginArtifact(ArtifactKind kind, const BgvParams& params) {
  Bytes out;
  out.reserve(SerializedBytes(kind, params));
  out.insert(out.end(), std::begin(kMagic), std::end(kMagic));
  out.push_back(static_cast<std::uint8_t>(kind));
  out.push_back(static_cast<std::uint8_t>(params.log_n));
  out.push_back(0);
  out.push_back(0);
  PutU64LE(out, params.t);
  PutU64LE(out, params.q);
  PutU64LE(out, PayloadBytes(kind, params));
  return out;
}

void AppendElement(Bytes& out, const RingElement& element) {
  const RingElement coefficients = ring::ToDomain(element, Domain::kCoefficient);
  for (std::uint64_t v : coefficients.values()) PutU64LE(out, v);
}

// Reads polynomials sequentially from a validated payload.
class PayloadReader {
 public:
  PayloadReader(std::span<const std::uint8_t> bytes, ArtifactKind expected,
                const BgvParams& params)
      : bytes_(bytes), n_(params.n()) {
    const ArtifactHeader header = ParseHeader(bytes);
    if (header.kind != expected) {
      throw FormatError("artifact kind " + std::to_string(static_cast<int>(header.kind)) +
                        ", expected " + std::to_string(static_cast<int>(expected)));
    }
    if (header.log_n != params.log_n || header.t != params.t || header.q != params.q) {
      throw FormatError("artifact parameters (log N, T, q) do not match the context");
    }
    if (header.payload_length != PayloadBytes(expected, params)) {
      throw FormatError("payload length " + std::to_string(header.payload_length) +
                        " does not match the parameter set");
    }
    offset_ = kHeaderBytes;
  }

  std::vector<std::uint64_t> NextValues(std::uint64_t bound, const char* what) {
    std::vector<std::uint64_t> values(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      values[i] = GetU64LE(bytes_.subspan(offset_, 8));
      offset_ += 8;
      if (values[i] >= bound) {
        throw FormatError(std::string(what) + " coefficient " + std::to_string(i) +
                          " is out of range");
      }
    }
    return values;
  }

  RingElement Next(const std::shared_ptr<const ring::RingContext>& ring, const char* what) {
    return RingElement(ring, NextValues(ring->q(), what), Domain::kCoefficient);
  }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t n_;
  std::size_t offset_ = 0;
};

}  // namespace

ArtifactHeader ParseHeader(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kHeaderBytes) {
    throw FormatError("artifact truncated: " + std::to_string(bytes.size()) +
                      " bytes is shorter than the header");
  }
  if (!std::equal(std::begin(kMagic), std::end(kMagic), bytes.begin())) {
    throw FormatError("bad artifact magic");
  }
  const std::uint8_t kind = bytes[4];
  if (kind < 1 || kind > 4) throw FormatError("unknown artifact kind " + std::to_string(kind));
  if (bytes[6] != 0 || bytes[7] != 0) throw FormatError("reserved header bytes are not zero");
  ArtifactHeader header{static_cast<ArtifactKind>(kind), bytes[5], GetU64LE(bytes.subspan(8, 8)),
                        GetU64LE(bytes.subspan(16, 8)), GetU64LE(bytes.subspan(24, 8))};
  if (header.payload_length != bytes.size() - kHeaderBytes) {
    throw FormatError("artifact declares " + std::to_string(header.payload_length) +
                      " payload bytes but carries " + std::to_string(bytes.size() - kHeaderBytes));
  }
  return header;
}

std::size_t PayloadBytes(ArtifactKind kind, const BgvParams& params) {
  return PolynomialCount(kind) * params.n() * 8;
}

std::size_t SerializedBytes(ArtifactKind kind, const BgvParams& params) {
  return kHeaderBytes + PayloadBytes(kind, params);
}

Bytes Serialize(const PublicKey& key) {
  Bytes out = BeginArtifact(ArtifactKind::kPublicKey, key.context()->params());
  AppendElement(out, key.b_q());
  AppendElement(out, key.b_p());
  AppendElement(out, key.a_q());
  AppendElement(out, key.a_p());
  return out;
}

Bytes Serialize(const SecretKey& key) {
  Bytes out = BeginArtifact(ArtifactKind::kSecretKey, key.context()->params());
  AppendElement(out, key.s_q());
  AppendElement(out, key.s_p());
  return out;
}

Bytes Serialize(const Ciphertext& ciphertext) {
  Bytes out = BeginArtifact(ArtifactKind::kCiphertext, ciphertext.context->params());
  AppendElement(out, ciphertext.c0);
  AppendElement(out, ciphertext.c1);
  return out;
}

Bytes Serialize(const Plaintext& plaintext) {
  Bytes out = BeginArtifact(ArtifactKind::kPlaintext, plaintext.context()->params());
  AppendElement(out, PlaintextPolynomial(plaintext));
  return out;
}

PublicKey DeserializePublicKey(std::span<const std::uint8_t> bytes, const ContextPtr& context) {
  PayloadReader reader(bytes, ArtifactKind::kPublicKey, context->params());
  RingElement b_q = reader.Next(context->ring_q(), "pk.b mod q");
  RingElement b_p = reader.Next(context->ring_p(), "pk.b mod p");
  RingElement a_q = reader.Next(context->ring_q(), "pk.a mod q");
  RingElement a_p = reader.Next(context->ring_p(), "pk.a mod p");
  return PublicKey(context, std::move(b_q), std::move(a_q), std::move(b_p), std::move(a_p));
}

SecretKey DeserializeSecretKey(std::span<const std::uint8_t> bytes, const ContextPtr& context) {
  PayloadReader reader(bytes, ArtifactKind::kSecretKey, context->params());
  RingElement s_q = reader.Next(context->ring_q(), "sk mod q");
  RingElement s_p = reader.Next(context->ring_p(), "sk mod p");
  return SecretKey(context, std::move(s_q), std::move(s_p));
}

Ciphertext DeserializeCiphertext(std::span<const std::uint8_t> bytes, const ContextPtr& context) {
  PayloadReader reader(bytes, ArtifactKind::kCiphertext, context->params());
  RingElement c0 = reader.Next(context->ring_q(), "ct.c0");
  RingElement c1 = reader.Next(context->ring_q(), "ct.c1");
  return Ciphertext{context, std::move(c0), std::move(c1), context->params().max_level(), false};
}

Plaintext DeserializePlaintext(std::span<const std::uint8_t> bytes, const ContextPtr& context) {
  PayloadReader reader(bytes, ArtifactKind::kPlaintext, context->params());
  RingElement poly = reader.Next(context->ring_t(), "pt");
  return PlaintextFromPolynomial(context, std::move(poly), context->params().max_level());
}

std::string CiphertextToBase64(const Ciphertext& ciphertext) {
  return Base64Encode(Serialize(ciphertext));
}

Ciphertext CiphertextFromBase64(std::string_view text, const ContextPtr& context) {
  return DeserializeCiphertext(Base64Decode(text), context);
}

}  // namespace privread::bgv
