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

#include "privread/bgv/params.hpp"

#include <bit>
#include <map>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>

#include "privread/common/encoding.hpp"

namespace privread::bgv {
namespace {

std::uint64_t ResolveSpecialPrime(int bits, std::uint64_t q) {
  std::uint64_t p = ring::FindNttPrime(bits, kPrimeCongruence);
  if (p == q) p = ring::NextNttPrime(q, kPrimeCongruence);
  return p;
}

}  // namespace

BgvParams BgvParams::Make(int log_n, std::vector<int> log_q, std::vector<int> log_p,
                          std::uint64_t t) {
  BgvParams params;
  params.log_n = log_n;
  params.log_q = std::move(log_q);
  params.log_p = std::move(log_p);
  params.t = t;
  if (params.log_q.size() != 1) {
    throw std::invalid_argument("only a single-prime ciphertext chain is supported");
  }
  if (params.log_p.empty()) throw std::invalid_argument("special-prime chain must not be empty");
  params.q = ring::FindNttPrime(params.log_q[0], kPrimeCongruence);
  params.p = ResolveSpecialPrime(params.log_p[0], params.q);
  params.Validate();
  return params;
}

BgvParams BgvParams::Preset(int log_n) {
  if (log_n < kMinPresetLogN || log_n > kMaxPresetLogN) {
    throw std::invalid_argument("no preset for log N = " + std::to_string(log_n));
  }
  return Make(log_n, {kDefaultPrimeBits}, {kDefaultPrimeBits}, kDefaultPlainModulus);
}

BgvParams BgvParams::Toy() {
  return Make(4, {kDefaultPrimeBits}, {kDefaultPrimeBits}, 193);
}

void BgvParams::Validate() const {
  if (log_n < 1 || log_n > 15) {
    throw std::invalid_argument("log N must be in [1, 15], got " + std::to_string(log_n));
  }
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n());
  if (!ring::IsPrime(t)) throw std::invalid_argument("plaintext modulus T is not prime");
  if ((t - 1) % two_n != 0) {
    throw std::invalid_argument("T = " + std::to_string(t) + " is not 1 mod 2N");
  }
  if (log_q.size() != 1 || log_p.empty()) {
    throw std::invalid_argument("unsupported modulus chain shape");
  }
  for (std::uint64_t prime : {q, p}) {
    if (!ring::IsPrime(prime) || (prime >> ring::Modulus::kMaxBits) != 0) {
      throw std::invalid_argument("modulus " + std::to_string(prime) + " is not a prime < 2^62");
    }
    if ((prime - 1) % two_n != 0) {
      throw std::invalid_argument("modulus " + std::to_string(prime) + " is not 1 mod 2N");
    }
  }
  if (static_cast<int>(std::bit_width(q)) != log_q[0]) {
    throw std::invalid_argument("q does not match log Q");
  }
  if (p == q) throw std::invalid_argument("special prime must differ from q");
  if (t >= q) throw std::invalid_argument("T must be smaller than q");
}

std::string BgvParams::Fingerprint() const {
  std::string canonical = "bgv;log_n=" + std::to_string(log_n) + ";log_q=";
  for (int b : log_q) canonical += std::to_string(b) + ",";
  canonical += ";log_p=";
  for (int b : log_p) canonical += std::to_string(b) + ",";
  canonical += ";t=" + std::to_string(t) + ";q=" + std::to_string(q) + ";p=" + std::to_string(p);
  return Sha256Hex(canonical);
}

std::shared_ptr<const BgvContext> BgvContext::Create(const BgvParams& params) {
  // Contexts are immutable; share one per parameter set.
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const BgvContext>> cache;
  const std::string key = params.Fingerprint();
  std::lock_guard lock(mu);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto context = std::make_shared<const BgvContext>(params);
  cache.emplace(key, context);
  return context;
}

BgvContext::BgvContext(const BgvParams& params) : params_(params) {
  params_.Validate();
  ring_q_ = ring::RingContext::Create(params_.n(), params_.q);
  ring_p_ = ring::RingContext::Create(params_.n(), params_.p);
  ring_t_ = ring::RingContext::Create(params_.n(), params_.t);
}

void RequireSameParams(const BgvContext& a, const BgvContext& b) {
  if (&a != &b && !(a.params() == b.params())) {
    throw std::invalid_argument("BGV parameter mismatch");
  }
}

}  // namespace privread::bgv
