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

#ifndef PRIVREAD_BGV_PARAMS_HPP_
#define PRIVREAD_BGV_PARAMS_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "privread/ring/ring_element.hpp"

namespace privread::bgv {

inline constexpr std::uint64_t kDefaultPlainModulus = 65537;
inline constexpr int kDefaultPrimeBits = 54;
// Every ciphertext prime is 1 mod 2^16, so one prime serves log N <= 15.
inline constexpr std::uint64_t kPrimeCongruence = 1ULL << 16;
inline constexpr int kMinPresetLogN = 13;
inline constexpr int kMaxPresetLogN = 15;

// One BGV parameter set. q and p are concrete primes resolved from the
// bit-length chains; p is the special prime that only widens key storage.
struct BgvParams {
  int log_n = 13;
  std::vector<int> log_q{kDefaultPrimeBits};
  std::vector<int> log_p{kDefaultPrimeBits};
  std::uint64_t t = kDefaultPlainModulus;
  std::uint64_t q = 0;
  std::uint64_t p = 0;
  // Informational label only.
  int security_level = 128;

  std::size_t n() const { return std::size_t{1} << log_n; }
  // Index of the top (and only) level of the ciphertext chain.
  int max_level() const { return static_cast<int>(log_q.size()) - 1; }

  // Resolves q and p and validates.
  static BgvParams Make(int log_n, std::vector<int> log_q, std::vector<int> log_p,
                        std::uint64_t t);
  // The per-channel defaults: log N in {13, 14, 15}, [54], [54], T = 65537.
  static BgvParams Preset(int log_n);
  // N = 16, T = 193. Small enough for brute-force oracles; tests only.
  static BgvParams Toy();

  // Throws std::invalid_argument on any congruence or range violation.
  void Validate() const;

  // SHA-256 over the canonical parameter encoding, hex.
  std::string Fingerprint() const;

  friend bool operator==(const BgvParams&, const BgvParams&) = default;
};

// Precomputed rings for one parameter set: R_q for ciphertexts, R_p for the
// special key limb, and R_t whose NTT defines the plaintext slots.
class BgvContext {
 public:
  static std::shared_ptr<const BgvContext> Create(const BgvParams& params);

  explicit BgvContext(const BgvParams& params);

  const BgvParams& params() const { return params_; }
  std::size_t n() const { return params_.n(); }
  std::uint64_t t() const { return params_.t; }
  std::uint64_t q() const { return params_.q; }

  const std::shared_ptr<const ring::RingContext>& ring_q() const { return ring_q_; }
  const std::shared_ptr<const ring::RingContext>& ring_p() const { return ring_p_; }
  const std::shared_ptr<const ring::RingContext>& ring_t() const { return ring_t_; }

 private:
  BgvParams params_;
  std::shared_ptr<const ring::RingContext> ring_q_;
  std::shared_ptr<const ring::RingContext> ring_p_;
  std::shared_ptr<const ring::RingContext> ring_t_;
};

void RequireSameParams(const BgvContext& a, const BgvContext& b);

}  // namespace privread::bgv

#endif  // PRIVREAD_BGV_PARAMS_HPP_
