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
#include "privread/ring/modulus.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace privread::ring {
namespace {

std::uint64_t MulModSlow(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<u128>(a) * b % m);
}

std::uint64_t PowModSlow(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = MulModSlow(result, base, m);
    base = MulModSlow(base, base, m);
    exp >>= 1;
  }
  return result;
}

}  // namespace

bool IsPrime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This witness set is exact for n < 3.3e24.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL,
                          37ULL}) {
    std::uint64_t x = PowModSlow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = MulModSlow(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Modulus::Modulus(std::uint64_t value) : value_(value) {
  if (value < 2 || (value >> kMaxBits) != 0) {
    throw std::invalid_argument("modulus must be in [2, 2^62): " + std::to_string(value));
  }
  bit_count_ = std::bit_width(value);
  const u128 ratio = ~static_cast<u128>(0) / value;  // floor((2^128 - 1) / q)
  ratio_hi_ = static_cast<std::uint64_t>(ratio >> 64);
  ratio_lo_ = static_cast<std::uint64_t>(ratio);
}

std::uint64_t Modulus::Reduce128(u128 x) const {
  const auto x_lo = static_cast<std::uint64_t>(x);
  const auto x_hi = static_cast<std::uint64_t>(x >> 64);
  // Quotient estimate floor(x * ratio / 2^128), low partial products folded in.
  const u128 lo_lo = static_cast<u128>(x_lo) * ratio_lo_;
  const u128 lo_hi = static_cast<u128>(x_lo) * ratio_hi_;
  const u128 hi_lo = static_cast<u128>(x_hi) * ratio_lo_;
  const u128 mid = (lo_lo >> 64) + static_cast<std::uint64_t>(lo_hi) +
                   static_cast<std::uint64_t>(hi_lo);
  const std::uint64_t quotient = x_hi * ratio_hi_ + static_cast<std::uint64_t>(lo_hi >> 64) +
                                 static_cast<std::uint64_t>(hi_lo >> 64) +
                                 static_cast<std::uint64_t>(mid >> 64);
  std::uint64_t r = x_lo - quotient * value_;
  while (r >= value_) r -= value_;
  return r;
}

std::uint64_t Modulus::Pow(std::uint64_t base, std::uint64_t exp) const {
  std::uint64_t result = 1;
  base = Reduce(base);
  while (exp != 0) {
    if (exp & 1) result = Mul(result, base);
    base = Mul(base, base);
    exp >>= 1;
  }
  return result;
}

std::uint64_t Modulus::Inverse(std::uint64_t a) const {
  a = Reduce(a);
  if (a == 0) throw std::invalid_argument("zero has no modular inverse");
  // Extended Euclid on signed 128-bit to stay exact for any q < 2^62.
  __int128 t = 0, new_t = 1;
  __int128 r = value_, new_r = a;
  while (new_r != 0) {
    const __int128 quotient = r / new_r;
    const __int128 tmp_t = t - quotient * new_t;
    t = new_t;
    new_t = tmp_t;
    const __int128 tmp_r = r - quotient * new_r;
    r = new_r;
    new_r = tmp_r;
  }
  if (r != 1) throw std::invalid_argument("value not invertible");
  if (t < 0) t += value_;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t Modulus::FromSigned(std::int64_t v) const {
  if (v >= 0) return static_cast<std::uint64_t>(v) % value_;
  const std::uint64_t mag = static_cast<std::uint64_t>(-(v + 1)) + 1;
  return Neg(mag % value_);
}

ShoupConstant MakeShoup(std::uint64_t operand, const Modulus& q) {
  ShoupConstant c;
  c.operand = operand;
  c.quotient = static_cast<std::uint64_t>((static_cast<u128>(operand) << 64) / q.value());
  return c;
}

PrimeModulus::PrimeModulus(std::uint64_t q, std::size_t n_max) : modulus_(q), n_max_(n_max) {
  if (n_max == 0 || !std::has_single_bit(n_max)) {
    throw std::invalid_argument("ring dimension must be a power of two");
  }
  if (!IsPrime(q)) throw std::invalid_argument("modulus is not prime: " + std::to_string(q));
  const std::uint64_t order = 2 * static_cast<std::uint64_t>(n_max);
  if ((q - 1) % order != 0) {
    throw std::invalid_argument("modulus " + std::to_string(q) + " is not 1 mod " +
                                std::to_string(order));
  }
  // g^((q-1)/order) has order dividing 2n_max; it is primitive iff its
  // (order/2)-th power is -1. Keep the smallest primitive root found.
  const std::uint64_t cofactor = (q - 1) / order;
  std::uint64_t found = 0;
  for (std::uint64_t g = 2; g < q && found == 0; ++g) {
    const std::uint64_t candidate = modulus_.Pow(g, cofactor);
    if (modulus_.Pow(candidate, order / 2) == q - 1) found = candidate;
  }
  if (found == 0) throw std::invalid_argument("no primitive root found");
  // Walk the cyclic group of primitive roots (odd powers) for the minimum.
  std::uint64_t best = found;
  const std::uint64_t square = modulus_.Mul(found, found);
  std::uint64_t current = found;
  for (std::uint64_t k = 1; k < order; k += 2) {
    if (current < best) best = current;
    current = modulus_.Mul(current, square);
  }
  root_ = best;
}

std::uint64_t PrimeModulus::RootFor(std::size_t n) const {
  if (n == 0 || !std::has_single_bit(n) || n > n_max_) {
    throw std::invalid_argument("unsupported ring dimension " + std::to_string(n));
  }
  return modulus_.Pow(root_, n_max_ / n);
}

std::uint64_t FindNttPrime(int bit_count, std::uint64_t congruence) {
  if (bit_count < 2 || bit_count > Modulus::kMaxBits) {
    throw std::invalid_argument("unsupported prime width");
  }
  const std::uint64_t low = 1ULL << (bit_count - 1);
  std::uint64_t candidate = (low / congruence) * congruence + 1;
  if (candidate < low) candidate += congruence;
  for (; (candidate >> bit_count) == 0; candidate += congruence) {
    if (IsPrime(candidate)) return candidate;
  }
  throw std::invalid_argument("no NTT prime of requested width");
}

std::uint64_t NextNttPrime(std::uint64_t after, std::uint64_t congruence) {
  std::uint64_t candidate = (after / congruence + 1) * congruence + 1;
  for (; (candidate >> Modulus::kMaxBits) == 0; candidate += congruence) {
    if (IsPrime(candidate)) return candidate;
  }
  throw std::invalid_argument("no larger NTT prime below 2^62");
}

}  // namespace privread::ring
