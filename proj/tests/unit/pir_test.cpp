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
#include <functional>
#include <string>
#include <vector>

#include "privread/bgv/params.hpp"
#include "privread/bgv/scheme.hpp"
#include "privread/bgv/serialization.hpp"
#include "privread/common/random.hpp"
#include "privread/pir/feasibility.hpp"
#include "privread/pir/layout.hpp"
#include "privread/pir/query.hpp"

namespace privread::pir {
namespace {

// Independent unpacker: slice window i and drop the zero padding.
std::string UnpackWindow(const std::vector<std::uint64_t>& c, std::size_t i, std::size_t s) {
  std::string out;
  for (std::size_t k = i * s; k < (i + 1) * s; ++k) {
    if (c[k] != 0) out.push_back(static_cast<char>(c[k]));
  }
  return out;
}

std::vector<std::string> RandomAsciiRecords(std::size_t n, std::size_t max_len, RandomStream& rng) {
  std::vector<std::string> out(n);
  for (auto& r : out) {
    const std::size_t len = 1 + rng.UniformBelow(max_len);
    for (std::size_t k = 0; k < len; ++k) r.push_back(static_cast<char>(32 + rng.UniformBelow(95)));
  }
  return out;
}

PirErrorCode CodeOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const PirError& e) {
    return e.code();
  }
  ADD_FAILURE() << "expected PirError";
  return PirErrorCode::kInvalidRecord;
}

TEST(RecordSlots, RoundsUpToMultipleOfEight) {
  EXPECT_EQ(ComputeRecordSlots(126), 128u);
  EXPECT_EQ(ComputeRecordSlots(64), 64u);
  EXPECT_EQ(ComputeRecordSlots(1), 8u);
  EXPECT_EQ(ComputeRecordSlots(224), 224u);
  EXPECT_EQ(ComputeRecordSlots(16, 2), 8u);
  EXPECT_THROW(ComputeRecordSlots(0), std::invalid_argument);
  for (std::size_t b = 1; b < 600; ++b) {
    const std::size_t s = ComputeRecordSlots(b);
    EXPECT_EQ(s % 8, 0u);
    EXPECT_GE(s, b);
    EXPECT_LT(s - b, 8u);
  }
}

TEST(Templates, Minima) {
  EXPECT_EQ(TemplateMinimum(TemplateSpec::Mini()), 128u);
  EXPECT_EQ(TemplateMinimum(TemplateSpec::Mid()), 224u);
  EXPECT_EQ(TemplateMinimum(TemplateSpec::Rich()), 256u);
  EXPECT_EQ(TemplateSpec::ByName("mid").name, "mid");
  EXPECT_THROW(TemplateSpec::ByName("giant"), std::invalid_argument);
}

TEST(Feasibility, WorkedExamples) {
  const auto mini = TemplateSpec::Mini();
  FeasibilityReport r = CheckFeasibility(13, 128, 64, mini);
  EXPECT_TRUE(r.feasible);
  EXPECT_TRUE(r.detail.empty());

  r = CheckFeasibility(13, 64, 64, mini);
  EXPECT_FALSE(r.feasible);
  EXPECT_TRUE(r.capacity_ok);
  EXPECT_FALSE(r.minimum_ok);
  EXPECT_EQ(r.detail, "template-minimum");

  r = CheckFeasibility(13, 128, 65, mini);
  EXPECT_FALSE(r.feasible);
  EXPECT_FALSE(r.capacity_ok);
  EXPECT_EQ(r.detail, "capacity");

  EXPECT_TRUE(CheckFeasibility(14, 224, 73, TemplateSpec::Mid()).feasible);
  EXPECT_FALSE(CheckFeasibility(14, 128, 73, TemplateSpec::Mid()).feasible);
  EXPECT_TRUE(CheckFeasibility(15, 256, 128, TemplateSpec::Rich()).feasible);

  r = CheckFeasibility(13, 136, 10, mini);
  EXPECT_FALSE(r.discrete_ok);
  EXPECT_EQ(r.detail, "discrete-allocation");
}

TEST(Feasibility, ConjunctionOfPredicates) {
  for (const auto& spec : {TemplateSpec::Mini(), TemplateSpec::Mid(), TemplateSpec::Rich()}) {
    for (const int log_n : kSupportedLogN) {
      for (std::size_t s = 8; s <= 600; s += 8) {
        for (const std::size_t n : {std::size_t{1}, std::size_t{16}, std::size_t{64},
                                    std::size_t{73}, std::size_t{128}, std::size_t{512}}) {
          const FeasibilityReport r = CheckFeasibility(log_n, s, n, spec);
          EXPECT_EQ(r.feasible, r.capacity_ok && r.minimum_ok && r.discrete_ok);
          EXPECT_EQ(r.capacity_ok, n * s <= (std::size_t{1} << log_n));
          EXPECT_EQ(r.feasible, r.detail.empty());
          if (r.feasible) EXPECT_NO_THROW(SlotLayout(n, s, std::size_t{1} << log_n));
        }
      }
    }
  }
}

TEST(Feasibility, CapacityFrontier) {
  EXPECT_EQ(MaxRecords(13, 128), 64u);
  EXPECT_EQ(MaxRecords(14, 224), 73u);
  EXPECT_EQ(MaxRecords(15, 256), 128u);
  EXPECT_EQ(MaxRecords(13, 64), 128u);
  EXPECT_EQ(MaxRecords(13, 512), 16u);
  EXPECT_EQ(MaxRecords(15, 64), 512u);
  EXPECT_EQ(MaxRecords(15, 512), 64u);
  for (const int log_n : kSupportedLogN) {
    for (const std::size_t s : kAllowedRecordSlots) {
      EXPECT_EQ(MaxRecords(log_n, s), (std::size_t{1} << log_n) / s);
    }
  }
}

TEST(Feasibility, SmallestRing) {
  EXPECT_EQ(SelectMinLogN(64, 128), 13);
  EXPECT_EQ(SelectMinLogN(65, 128), 14);
  EXPECT_EQ(SelectMinLogN(128, 256), 15);
  EXPECT_EQ(SelectMinLogN(512, 512), std::nullopt);
}

TEST(Layout, WindowsAndCapacity) {
  const SlotLayout layout(4, 4, 16);
  EXPECT_EQ(layout.WindowBegin(1), 4u);
  EXPECT_EQ(layout.WindowEnd(1), 8u);
  EXPECT_EQ(CodeOf([] { SlotLayout(5, 4, 16); }), PirErrorCode::kCapacityExceeded);
  EXPECT_THROW(SlotLayout(0, 4, 16), PirError);
}

TEST(Records, RejectZeroBytesAndEmptySets) {
  EXPECT_EQ(CodeOf([] { RecordSet({std::string("a\0b", 3)}); }), PirErrorCode::kInvalidRecord);
  EXPECT_EQ(CodeOf([] { RecordSet({}); }), PirErrorCode::kInvalidRecord);
  EXPECT_EQ(RecordSet({"ab", "abcd"}).MaxLength(), 4u);
}

TEST(Pack, HandExample) {
  const auto c = PackRecords(RecordSet({"AB", "C"}), SlotLayout(2, 4, 16));
  ASSERT_EQ(c.size(), 16u);
  EXPECT_EQ(std::vector<std::uint64_t>(c.begin(), c.begin() + 8),
            (std::vector<std::uint64_t>{65, 66, 0, 0, 67, 0, 0, 0}));
  for (std::size_t k = 8; k < 16; ++k) EXPECT_EQ(c[k], 0u);
}

TEST(Pack, OversizeRecordRejected) {
  EXPECT_EQ(CodeOf([] { PackRecords(RecordSet({"ABCDE"}), SlotLayout(2, 4, 16)); }),
            PirErrorCode::kOversizeRecord);
  EXPECT_EQ(CodeOf([] { PackRecords(RecordSet({"A", "B", "C"}), SlotLayout(2, 4, 16)); }),
            PirErrorCode::kCapacityExceeded);
}

TEST(Pack, UnpackOracleInvertsPacking) {
  RandomStream rng = RandomStream::FromSeed(21);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n_ring = std::size_t{1} << (4 + rng.UniformBelow(6));
    const std::size_t s = 1 + rng.UniformBelow(n_ring);
    const std::size_t n = 1 + rng.UniformBelow(n_ring / s);
    const auto records = RandomAsciiRecords(n, s, rng);
    const SlotLayout layout(n, s, n_ring);
    const auto c = PackRecords(RecordSet(records), layout);
    for (std::size_t i = 0; i < n; ++i) ASSERT_EQ(UnpackWindow(c, i, s), records[i]);
    for (std::size_t k = n * s; k < n_ring; ++k) ASSERT_EQ(c[k], 0u);
  }
}

TEST(Pack, EncodeDatabaseRoundTrip) {
  const auto ctx = bgv::BgvContext::Create(bgv::BgvParams::Toy());
  std::vector<std::uint64_t> c(ctx->n(), 0);
  c[0] = 65;
  c[1] = 66;
  c[4] = 67;
  EXPECT_EQ(bgv::DecodeSlots(EncodeDatabase(c, ctx)), c);
  EXPECT_THROW(EncodeDatabase(std::vector<std::uint64_t>{65, 66}, ctx), std::invalid_argument);
  const auto zero = EncodeDatabase(std::vector<std::uint64_t>(ctx->n(), 0), ctx);
  const auto poly = bgv::PlaintextPolynomial(zero);
  for (const auto v : poly.values()) EXPECT_EQ(v, 0u);
  c[5] = ctx->t();
  EXPECT_THROW(EncodeDatabase(c, ctx), std::invalid_argument);
}

TEST(Selector, WindowedOnes) {
  const SlotLayout layout(4, 4, 16);
  const auto v = SelectorSlots(1, layout);
  EXPECT_EQ(v, (std::vector<std::uint64_t>{0, 0, 0, 0, 1, 1, 1, 1, 0, 0, 0, 0, 0, 0, 0, 0}));
  EXPECT_EQ(CodeOf([&] { SelectorSlots(4, layout); }), PirErrorCode::kIndexOutOfRange);
  EXPECT_EQ(CodeOf([&] { SelectorSlots(-1, layout); }), PirErrorCode::kIndexOutOfRange);
}

TEST(Selector, SerializedLengthIndependentOfIndex) {
  const auto ctx = bgv::BgvContext::Create(bgv::BgvParams::Preset(13));
  RandomStream rng = RandomStream::FromSeed(22);
  const auto keys = bgv::KeyGen(ctx, rng);
  const SlotLayout layout(64, 128, ctx->n());
  const std::size_t len = BuildSelector(0, layout, keys.public_key, rng).size();
  for (const std::int64_t i : {1, 17, 63}) {
    EXPECT_EQ(BuildSelector(i, layout, keys.public_key, rng).size(), len);
  }
  EXPECT_EQ(len, (bgv::SerializedBytes(bgv::ArtifactKind::kCiphertext, ctx->params()) + 2) / 3 * 4);
  EXPECT_EQ(CodeOf([&] { BuildSelector(64, layout, keys.public_key, rng); }),
            PirErrorCode::kIndexOutOfRange);
}

TEST(Extract, StopsAtPaddingZero) {
  const SlotLayout layout(2, 4, 16);
  std::vector<std::uint64_t> u(16, 0);
  u[4] = 72;
  u[5] = 73;
  u[7] = 74;  // after the terminator, ignored
  EXPECT_EQ(std::get<std::string>(ExtractRecord(u, 1, layout)), "HI");
  EXPECT_EQ(std::get<std::string>(ExtractRecord(u, 0, layout)), "");
  EXPECT_EQ(CodeOf([&] { ExtractRecord(u, 2, layout); }), PirErrorCode::kIndexOutOfRange);
}

TEST(Extract, SingleSlotWindowReturnsRawValue) {
  const SlotLayout layout(8, 1, 16);
  std::vector<std::uint64_t> u(16, 0);
  u[3] = 42;
  EXPECT_EQ(std::get<std::uint64_t>(ExtractRecord(u, 3, layout)), 42u);
}

TEST(Extract, NonByteSlotIsMalformed) {
  const SlotLayout layout(2, 4, 16);
  std::vector<std::uint64_t> u(16, 0);
  u[0] = 300;
  EXPECT_EQ(CodeOf([&] { ExtractRecord(u, 0, layout); }), PirErrorCode::kMalformedResponse);
}

TEST(Retrieval, ToyEndToEndAgainstGroundTruth) {
  const auto ctx = bgv::BgvContext::Create(bgv::BgvParams::Toy());
  RandomStream rng = RandomStream::FromSeed(23);
  const auto keys = bgv::KeyGen(ctx, rng);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t s = 1 + rng.UniformBelow(8);
    const std::size_t n = 1 + rng.UniformBelow(ctx->n() / s);
    const auto records = RandomAsciiRecords(n, s, rng);
    const SlotLayout layout(n, s, ctx->n());
    const bgv::PreparedPlaintext db(EncodeDatabase(PackRecords(RecordSet(records), layout), ctx));
    for (std::size_t i = 0; i < n; ++i) {
      const std::string query = BuildSelector(static_cast<std::int64_t>(i), layout, keys.public_key, rng);
      const auto ct = bgv::CiphertextFromBase64(query, ctx);
      const std::string response = bgv::CiphertextToBase64(bgv::EvalCtPt(ct, db));
      EXPECT_EQ(response.size(), query.size());
      const RecoveredRecord got =
          DecryptResult(response, keys.secret_key, static_cast<std::int64_t>(i), layout);
      if (s == 1) {
        ASSERT_EQ(std::get<std::uint64_t>(got), static_cast<unsigned char>(records[i][0]));
      } else {
        ASSERT_EQ(std::get<std::string>(got), records[i]);
      }
    }
  }
}

TEST(Retrieval, DefaultMiniConfiguration) {
  const auto ctx = bgv::BgvContext::Create(bgv::BgvParams::Preset(13));
  RandomStream rng = RandomStream::FromSeed(24);
  const auto keys = bgv::KeyGen(ctx, rng);
  std::vector<std::string> records(64);
  for (std::size_t i = 0; i < records.size(); ++i) {
    for (std::size_t k = 0; k < 121 + i % 8; ++k) {
      records[i].push_back(static_cast<char>(1 + rng.UniformBelow(255)));
    }
  }
  const SlotLayout layout(64, 128, ctx->n());
  const bgv::PreparedPlaintext db(EncodeDatabase(PackRecords(RecordSet(records), layout), ctx));
  for (const std::int64_t i : {0, 31, 63}) {
    const std::string q = BuildSelector(i, layout, keys.public_key, rng);
    const std::string r = bgv::CiphertextToBase64(bgv::EvalCtPt(bgv::CiphertextFromBase64(q, ctx), db));
    EXPECT_EQ(std::get<std::string>(DecryptResult(r, keys.secret_key, i, layout)),
              records[static_cast<std::size_t>(i)]);
  }
  EXPECT_EQ(CodeOf([&] { DecryptResult("@@", keys.secret_key, 0, layout); }),
            PirErrorCode::kMalformedResponse);
}

}  // namespace
}  // namespace privread::pir
