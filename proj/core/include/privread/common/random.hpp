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
#ifndef PRIVREAD_COMMON_RANDOM_HPP_
#define PRIVREAD_COMMON_RANDOM_HPP_

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace privread {

using Seed = std::array<std::uint8_t, 32>;

// Deterministic cryptographic randomness stream backed by the ChaCha20
// keystream. Two streams built from the same seed produce identical output.
// Not thread-safe; give each thread (or each call) its own stream.
class RandomStream {
 public:
  explicit RandomStream(const Seed& seed);

  // Seeded from the operating system CSPRNG.
  static RandomStream FromEntropy();
  // Expands a small integer seed (test fixtures, reproducible runs).
  static RandomStream FromSeed(std::uint64_t seed);

  void Fill(std::span<std::uint8_t> out);
  std::uint64_t NextU64();
  // Uniform in [0, bound) by rejection sampling. bound must be nonzero.
  std::uint64_t UniformBelow(std::uint64_t bound);

 private:
  void Refill();

  Seed key_;
  std::uint64_t block_counter_ = 0;
  std::vector<std::uint8_t> buffer_;
  std::size_t offset_ = 0;
};

}  // namespace privread

#endif  // PRIVREAD_COMMON_RANDOM_HPP_
