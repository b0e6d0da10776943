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
#include "privread/common/random.hpp"

#include <sodium.h>

#include <algorithm>
#include <stdexcept>

namespace privread {
namespace {

constexpr std::size_t kBufferBytes = 4096;

void EnsureSodium() {
  static const bool ok = sodium_init() >= 0;
  if (!ok) throw std::runtime_error("libsodium initialization failed");
}

}  // namespace

RandomStream::RandomStream(const Seed& seed) : key_(seed), buffer_(kBufferBytes) {
  EnsureSodium();
  offset_ = buffer_.size();
}

RandomStream RandomStream::FromEntropy() {
  EnsureSodium();
  Seed seed;
  randombytes_buf(seed.data(), seed.size());
  return RandomStream(seed);
}

RandomStream RandomStream::FromSeed(std::uint64_t seed) {
  EnsureSodium();
  std::uint8_t raw[8];
  for (int i = 0; i < 8; ++i) raw[i] = static_cast<std::uint8_t>(seed >> (8 * i));
  Seed key;
  crypto_hash_sha256(key.data(), raw, sizeof(raw));
  return RandomStream(key);
}

void RandomStream::Refill() {
  // 96-bit nonce carries the high half of the block counter so a stream never
  // wraps the 32-bit ChaCha20-IETF counter.
  std::uint8_t nonce[crypto_stream_chacha20_ietf_NONCEBYTES] = {};
  const std::uint64_t high = block_counter_ >> 32;
  for (int i = 0; i < 8; ++i) nonce[i] = static_cast<std::uint8_t>(high >> (8 * i));
  std::fill(buffer_.begin(), buffer_.end(), 0);
  crypto_stream_chacha20_ietf_xor_ic(buffer_.data(), buffer_.data(), buffer_.size(), nonce,
                                     static_cast<std::uint32_t>(block_counter_), key_.data());
  block_counter_ += buffer_.size() / 64;
  offset_ = 0;
}

void RandomStream::Fill(std::span<std::uint8_t> out) {
  std::size_t written = 0;
  while (written < out.size()) {
    if (offset_ == buffer_.size()) Refill();
    const std::size_t take = std::min(out.size() - written, buffer_.size() - offset_);
    std::copy_n(buffer_.begin() + static_cast<std::ptrdiff_t>(offset_), take,
                out.begin() + static_cast<std::ptrdiff_t>(written));
    offset_ += take;
    written += take;
  }
}

std::uint64_t RandomStream::NextU64() {
  std::uint8_t raw[8];
  Fill(raw);
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(raw[i]) << (8 * i);
  return v;
}

std::uint64_t RandomStream::UniformBelow(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("UniformBelow: zero bound");
  // Largest multiple of bound representable; draws at or above it are rejected.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % bound + 1) % bound;
  for (;;) {
    const std::uint64_t v = NextU64();
    if (v <= limit) return v % bound;
  }
}

}  // namespace privread
