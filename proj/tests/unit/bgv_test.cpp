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

#include <cstdint>
#include <vector>

#include "privread/bgv/params.hpp"
#include "privread/bgv/scheme.hpp"
#include "privread/bgv/serialization.hpp"
#include "privread/common/encoding.hpp"
#include "privread/common/random.hpp"
#include "privread/ring/op_counter.hpp"
#include "privread/ring/ring_element.hpp"

namespace privread::bgv {
namespace {

using u128 = unsigned __int128;

std::vector<std::uint64_t> RandomSlots(const ContextPtr& ctx, RandomStream& rng) {
  std::vector<std::uint64_t> v(ctx->n());
  for (auto& x : v) x = rng.UniformBelow(ctx->t());
  return v;
}

// Negacyclic product in Z_t[X]/(X^n + 1), computed directly.
std::vector<std::uint64_t> SchoolbookModT(std::span<const std::uint64_t> a,
                                          std::span<const std::uint64_t> b, std::uint64_t t) {
  const std::size_t n = a.size();
  std::vector<std::uint64_t> c(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::uint64_t prod = a[i] * b[j] % t;
      const std::size_t k = (i + j) % n;
      c[k] = i + j < n ? (c[k] + prod) % t : (c[k] + t - prod) % t;
    }
  }
  return c;
}

ContextPtr Toy() { return BgvContext::Create(BgvParams::Toy()); }

TEST(Params, PresetsUseDefaultPrimes) {
  for (const int log_n : {13, 14, 15}) {
    const BgvParams p = BgvParams::Preset(log_n);
    EXPECT_EQ(p.q, 9007199255658497ULL);
    EXPECT_EQ(p.p, 9007199256051713ULL);
    EXPECT_EQ(p.t, 65537u);
    EXPECT_EQ(p.n(), std::size_t{1} << log_n);
    EXPECT_EQ(p.log_q, std::vector<int>{54});
    EXPECT_EQ(p.log_p, std::vector<int>{54});
    EXPECT_EQ(p.max_level(), 0);
  }
  EXPECT_THROW(BgvParams::Preset(12), std::invalid_argument);
}

TEST(Params, RejectsInvalidCombinations) {
  EXPECT_THROW(BgvParams::Make(13, {54}, {54}, 65539), std::invalid_argument);  // not 1 mod 2N
  EXPECT_THROW(BgvParams::Make(13, {54, 54}, {54}, 65537), std::invalid_argument);
  EXPECT_THROW(BgvParams::Make(16, {54}, {54}, 65537), std::invalid_argument);
  EXPECT_THROW(BgvParams::Make(13, {54}, {}, 65537), std::invalid_argument);
  EXPECT_THROW(BgvParams::Make(13, {54}, {54}, 65536), std::invalid_argument);
}

TEST(Params, FingerprintIdentifiesParameterSet) {
  EXPECT_EQ(BgvParams::Preset(13).Fingerprint(), BgvParams::Preset(13).Fingerprint());
  EXPECT_NE(BgvParams::Preset(13).Fingerprint(), BgvParams::Preset(14).Fingerprint());
  EXPECT_EQ(BgvParams::Preset(13).Fingerprint().size(), 64u);
  EXPECT_EQ(BgvContext::Create(BgvParams::Preset(13)), BgvContext::Create(BgvParams::Preset(13)));
}

TEST(Encoding, SlotsRoundTripAndPadding) {
  const ContextPtr ctx = Toy();
  const Plaintext pt = EncodeSlots(std::vector<std::uint64_t>{5, 6, 7}, ctx);
  const auto slots = DecodeSlots(pt);
  ASSERT_EQ(slots.size(), ctx->n());
  EXPECT_EQ(slots[0], 5u);
  EXPECT_EQ(slots[2], 7u);
  for (std::size_t i = 3; i < slots.size(); ++i) EXPECT_EQ(slots[i], 0u);
  EXPECT_THROW(EncodeSlots(std::vector<std::uint64_t>(ctx->n() + 1, 1), ctx),
               std::invalid_argument);
  EXPECT_THROW(EncodeSlots(std::vector<std::uint64_t>{ctx->t()}, ctx), std::invalid_argument);
  RandomStream rng = RandomStream::FromSeed(3);
  const Plaintext r = EncodeSlots(RandomSlots(ctx, rng), ctx);
  EXPECT_EQ(PlaintextFromPolynomial(ctx, PlaintextPolynomial(r), 0), r);
}

TEST(Scheme, RoundTripToy) {
  const ContextPtr ctx = Toy();
  RandomStream rng = RandomStream::FromSeed(4);
  const KeyPair keys = KeyGen(ctx, rng);
  for (int trial = 0; trial < 200; ++trial) {
    const auto m = RandomSlots(ctx, rng);
    const Ciphertext ct = Encrypt(keys.public_key, EncodeSlots(m, ctx), rng);
    EXPECT_TRUE(ct.is_fresh);
    ASSERT_EQ(DecodeSlots(Decrypt(keys.secret_key, ct)), m);
  }
}

TEST(Scheme, RoundTripPresets) {
  RandomStream rng = RandomStream::FromSeed(5);
  for (const int log_n : {13, 14, 15}) {
    const ContextPtr ctx = BgvContext::Create(BgvParams::Preset(log_n));
    const KeyPair keys = KeyGen(ctx, rng);
    const auto m = RandomSlots(ctx, rng);
    const Ciphertext ct = Encrypt(keys.public_key, EncodeSlots(m, ctx), rng);
    EXPECT_EQ(DecodeSlots(Decrypt(keys.secret_key, ct)), m) << "log N " << log_n;
  }
}

TEST(Scheme, CiphertextPlaintextProductIsSlotwise) {
  const ContextPtr ctx = Toy();
  RandomStream rng = RandomStream::FromSeed(6);
  const KeyPair keys = KeyGen(ctx, rng);
  const std::uint64_t t = ctx->t();
  for (int trial = 0; trial < 500; ++trial) {
    const auto a = RandomSlots(ctx, rng);
    const auto b = RandomSlots(ctx, rng);
    const Plaintext pa = EncodeSlots(a, ctx);
    const Plaintext pb = EncodeSlots(b, ctx);
    const Ciphertext prod = EvalCtPt(Encrypt(keys.public_key, pa, rng), pb);
    EXPECT_FALSE(prod.is_fresh);
    const Plaintext got = Decrypt(keys.secret_key, prod);
    std::vector<std::uint64_t> expected(ctx->n());
    for (std::size_t i = 0; i < expected.size(); ++i) expected[i] = a[i] * b[i] % t;
    ASSERT_EQ(DecodeSlots(got), expected) << "trial " << trial;
    // The same product seen as polynomials in R_T.
    const ring::RingElement poly = PlaintextPolynomial(got);
    ASSERT_EQ(std::vector<std::uint64_t>(poly.values().begin(), poly.values().end()),
              SchoolbookModT(PlaintextPolynomial(pa).values(), PlaintextPolynomial(pb).values(), t));
  }
}

TEST(Scheme, ProductAtProductionSize) {
  const ContextPtr ctx = BgvContext::Create(BgvParams::Preset(15));
  RandomStream rng = RandomStream::FromSeed(7);
  const KeyPair keys = KeyGen(ctx, rng);
  for (int trial = 0; trial < 3; ++trial) {
    const auto a = RandomSlots(ctx, rng);
    const auto b = RandomSlots(ctx, rng);
    const Ciphertext prod =
        EvalCtPt(Encrypt(keys.public_key, EncodeSlots(a, ctx), rng), PreparedPlaintext(EncodeSlots(b, ctx)));
    const auto got = DecodeSlots(Decrypt(keys.secret_key, prod));
    for (std::size_t i = 0; i < a.size(); ++i) {
      ASSERT_EQ(got[i], static_cast<std::uint64_t>(static_cast<u128>(a[i]) * b[i] % ctx->t()));
    }
  }
}

TEST(Scheme, WrongKeyDoesNotDecrypt) {
  const ContextPtr ctx = BgvContext::Create(BgvParams::Preset(13));
  RandomStream rng = RandomStream::FromSeed(8);
  const KeyPair alice = KeyGen(ctx, rng);
  const KeyPair mallory = KeyGen(ctx, rng);
  const auto m = RandomSlots(ctx, rng);
  const Ciphertext ct = Encrypt(alice.public_key, EncodeSlots(m, ctx), rng);
  EXPECT_NE(DecodeSlots(Decrypt(mallory.secret_key, ct)), m);
}

TEST(Scheme, EncryptionIsRandomized) {
  const ContextPtr ctx = Toy();
  RandomStream rng = RandomStream::FromSeed(9);
  const KeyPair keys = KeyGen(ctx, rng);
  const Plaintext pt = EncodeSlots(std::vector<std::uint64_t>{1, 2, 3}, ctx);
  const Ciphertext a = Encrypt(keys.public_key, pt, rng);
  const Ciphertext b = Encrypt(keys.public_key, pt, rng);
  EXPECT_NE(a.c0, b.c0);
}

TEST(Scheme, KeyGenDeterministicForSeed) {
  const ContextPtr ctx = Toy();
  RandomStream r1 = RandomStream::FromSeed(10);
  RandomStream r2 = RandomStream::FromSeed(10);
  const KeyPair a = KeyGen(ctx, r1);
  const KeyPair b = KeyGen(ctx, r2);
  EXPECT_EQ(a.public_key, b.public_key);
  EXPECT_EQ(a.secret_key, b.secret_key);
}

TEST(Scheme, EvaluationCostIsDataIndependent) {
  const ContextPtr ctx = BgvContext::Create(BgvParams::Preset(13));
  RandomStream rng = RandomStream::FromSeed(11);
  const KeyPair keys = KeyGen(ctx, rng);
  const PreparedPlaintext db(EncodeSlots(RandomSlots(ctx, rng), ctx));
  std::optional<ring::RingOpCounts> first;
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<std::uint64_t> sel(ctx->n(), 0);
    if (trial > 0) sel[static_cast<std::size_t>(trial) * 100] = 1;
    const Ciphertext ct = Encrypt(keys.public_key, EncodeSlots(sel, ctx), rng);
    ring::ScopedRingOpCounter counter;
    (void)EvalCtPt(ct, db);
    const ring::RingOpCounts ops = counter.Delta();
    if (!first) first = ops;
    EXPECT_EQ(ops, *first);
  }
  EXPECT_EQ(first->forward_ntt, 2u);
  EXPECT_EQ(first->pointwise_mul, 2u);
  EXPECT_EQ(first->inverse_ntt, 2u);
}

TEST(Scheme, MixedParameterSetsRejected) {
  RandomStream rng = RandomStream::FromSeed(12);
  const ContextPtr a = BgvContext::Create(BgvParams::Preset(13));
  const ContextPtr b = BgvContext::Create(BgvParams::Preset(14));
  const KeyPair ka = KeyGen(a, rng);
  const KeyPair kb = KeyGen(b, rng);
  const Ciphertext ct = Encrypt(ka.public_key, EncodeSlots(std::vector<std::uint64_t>{1}, a), rng);
  EXPECT_THROW(Decrypt(kb.secret_key, ct), std::invalid_argument);
  EXPECT_THROW(EvalCtPt(ct, EncodeSlots(std::vector<std::uint64_t>{1}, b)), std::invalid_argument);
  EXPECT_THROW(Encrypt(ka.public_key, EncodeSlots(std::vector<std::uint64_t>{1}, b), rng),
               std::invalid_argument);
}

TEST(Serialization, SizesFollowParameters) {
  for (const int log_n : {13, 14, 15}) {
    const BgvParams p = BgvParams::Preset(log_n);
    const std::size_t n = p.n();
    EXPECT_EQ(PayloadBytes(ArtifactKind::kPublicKey, p), 32 * n);
    EXPECT_EQ(PayloadBytes(ArtifactKind::kSecretKey, p), 16 * n);
    EXPECT_EQ(PayloadBytes(ArtifactKind::kCiphertext, p), 16 * n);
    EXPECT_EQ(PayloadBytes(ArtifactKind::kPlaintext, p), 8 * n);
    EXPECT_EQ(SerializedBytes(ArtifactKind::kCiphertext, p), 16 * n + kHeaderBytes);
  }
}

TEST(Serialization, ArtifactsRoundTrip) {
  const ContextPtr ctx = BgvContext::Create(BgvParams::Preset(13));
  RandomStream rng = RandomStream::FromSeed(13);
  const KeyPair keys = KeyGen(ctx, rng);
  const Plaintext pt = EncodeSlots(RandomSlots(ctx, rng), ctx);
  const Ciphertext ct = Encrypt(keys.public_key, pt, rng);

  const Bytes pk_bytes = Serialize(keys.public_key);
  const Bytes sk_bytes = Serialize(keys.secret_key);
  const Bytes ct_bytes = Serialize(ct);
  const Bytes pt_bytes = Serialize(pt);
  EXPECT_EQ(pk_bytes.size(), 262176u);
  EXPECT_EQ(sk_bytes.size(), 131104u);
  EXPECT_EQ(ct_bytes.size(), 131104u);
  EXPECT_EQ(pt_bytes.size(), 65568u);

  EXPECT_EQ(DeserializePublicKey(pk_bytes, ctx), keys.public_key);
  EXPECT_EQ(DeserializeSecretKey(sk_bytes, ctx), keys.secret_key);
  EXPECT_EQ(DeserializePlaintext(pt_bytes, ctx), pt);
  const Ciphertext back = DeserializeCiphertext(ct_bytes, ctx);
  EXPECT_EQ(back.c0, ct.c0);
  EXPECT_EQ(back.c1, ct.c1);
  EXPECT_EQ(DecodeSlots(Decrypt(keys.secret_key, back)), DecodeSlots(pt));

  const ArtifactHeader h = ParseHeader(ct_bytes);
  EXPECT_EQ(h.kind, ArtifactKind::kCiphertext);
  EXPECT_EQ(h.log_n, 13);
  EXPECT_EQ(h.t, 65537u);
  EXPECT_EQ(h.q, 9007199255658497ULL);
  EXPECT_EQ(h.payload_length, 131072u);
  EXPECT_EQ(std::string(ct_bytes.begin(), ct_bytes.begin() + 4), "BGV1");

  const std::string b64 = CiphertextToBase64(ct);
  EXPECT_EQ(b64.size(), (ct_bytes.size() + 2) / 3 * 4);
  EXPECT_EQ(CiphertextFromBase64(b64, ctx).c1, ct.c1);
}

TEST(Serialization, RejectsMalformedInput) {
  const ContextPtr ctx = Toy();
  RandomStream rng = RandomStream::FromSeed(14);
  const KeyPair keys = KeyGen(ctx, rng);
  const Ciphertext ct = Encrypt(keys.public_key, EncodeSlots(std::vector<std::uint64_t>{1}, ctx), rng);
  const Bytes good = Serialize(ct);

  Bytes bad_magic = good;
  bad_magic[0] = 'X';
  EXPECT_THROW(DeserializeCiphertext(bad_magic, ctx), FormatError);

  Bytes truncated(good.begin(), good.end() - 1);
  EXPECT_THROW(DeserializeCiphertext(truncated, ctx), FormatError);
  EXPECT_THROW(DeserializeCiphertext(Bytes(good.begin(), good.begin() + 10), ctx), FormatError);

  EXPECT_THROW(DeserializePublicKey(good, ctx), FormatError);  // kind mismatch

  Bytes out_of_range = good;
  for (std::size_t i = 0; i < 8; ++i) out_of_range[kHeaderBytes + i] = 0xff;
  EXPECT_THROW(DeserializeCiphertext(out_of_range, ctx), FormatError);

  Bytes reserved = good;
  reserved[6] = 1;
  EXPECT_THROW(DeserializeCiphertext(reserved, ctx), FormatError);

  const ContextPtr other = BgvContext::Create(BgvParams::Preset(13));
  EXPECT_THROW(DeserializeCiphertext(good, other), FormatError);

  EXPECT_THROW(CiphertextFromBase64("not base64!", ctx), FormatError);
  EXPECT_THROW(CiphertextFromBase64("", ctx), FormatError);
}

TEST(Encoding, Base64AndDigests) {
  EXPECT_EQ(Base64Encode(AsBytes("foobar")), "Zm9vYmFy");
  EXPECT_EQ(Base64Encode(AsBytes("fo")), "Zm8=");
  const Bytes d = Base64Decode("Zm8=");
  EXPECT_EQ(std::string(d.begin(), d.end()), "fo");
  EXPECT_THROW(Base64Decode("Zm8"), FormatError);
  EXPECT_EQ(Sha256Hex(std::string_view("abc")),
            "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  Bytes buf;
  PutU64LE(buf, 0x0102030405060708ULL);
  ASSERT_EQ(buf.size(), 8u);
  EXPECT_EQ(buf[0], 0x08);
  EXPECT_EQ(GetU64LE(buf), 0x0102030405060708ULL);
}

}  // namespace
}  // namespace privread::bgv
