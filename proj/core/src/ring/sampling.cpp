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

#include "privread/ring/sampling.hpp"

#include <array>
#include <cmath>
#include <utility>

namespace privread::ring {
namespace {

// Cumulative distribution of |e| for the centered discrete Gaussian, scaled to
// 2^64. Entry k is P(|e| <= k).
std::array<std::uint64_t, kErrorBound + 1> BuildMagnitudeTable() {
  std::array<long double, kErrorBound + 1> weight{};
  long double total = 0;
  for (std::int64_t k = 0; k <= kErrorBound; ++k) {
    const long double w = std::exp(-static_cast<long double>(k * k) /
                                   (2.0L * kErrorSigma * kErrorSigma));
    weight[k] = k == 0 ? w : 2 * w;
    total += weight[k];
  }
  std::array<std::uint64_t, kErrorBound + 1> table{};
  long double cumulative = 0;
  for (std::int64_t k = 0; k <= kErrorBound; ++k) {
    cumulative += weight[k] / total;
    table[k] = k == kErrorBound ? UINT64_MAX
                                : static_cast<std::uint64_t>(cumulative * 18446744073709551616.0L);
  }
  return table;
}

}  // namespace

std::vector<std::int64_t> SampleTernarySigned(std::size_t n, RandomStream& rng) {
  std::vector<std::int64_t> out(n);
  for (auto& v : out) v = static_cast<std::int64_t>(rng.UniformBelow(3)) - 1;
  return out;
}

std::vector<std::int64_t> SampleErrorSigned(std::size_t n, RandomStream& rng) {
  static const auto table = BuildMagnitudeTable();
  std::vector<std::int64_t> out(n);
  for (auto& v : out) {
    const std::uint64_t u = rng.NextU64();
    std::int64_t magnitude = 0;
    while (magnitude < kErrorBound && u > table[magnitude]) ++magnitude;
    const bool negative = (rng.NextU64() & 1) != 0;
    v = negative ? -magnitude : magnitude;
  }
  return out;
}

RingElement SampleUniform(std::shared_ptr<const RingContext> context, RandomStream& rng) {
  std::vector<std::uint64_t> values(context->n());
  for (auto& v : values) v = rng.UniformBelow(context->q());
  return RingElement(std::move(context), std::move(values), Domain::kCoefficient);
}

RingElement SampleTernary(std::shared_ptr<const RingContext> context, RandomStream& rng) {
  const auto signed_values = SampleTernarySigned(context->n(), rng);
  return FromSigned(std::move(context), signed_values);
}

RingElement SampleError(std::shared_ptr<const RingContext> context, RandomStream& rng) {
  const auto signed_values = SampleErrorSigned(context->n(), rng);
  return FromSigned(std::move(context), signed_values);
}

}  // namespace privread::ring
