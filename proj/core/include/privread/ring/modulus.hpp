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
#ifndef PRIVREAD_RING_MODULUS_HPP_
#define PRIVREAD_RING_MODULUS_HPP_

#include <cstddef>
#include <cstdint>

namespace privread::ring {

using u128 = unsigned __int128;

// Deterministic Miller-Rabin, exact for every 64-bit input.
bool IsPrime(std::uint64_t n);

// Arithmetic modulo an odd modulus q < 2^62 with Barrett reduction of
// 128-bit products.
class Modulus {
 public:
  static constexpr int kMaxBits = 62;

  explicit Modulus(std::uint64_t value);

  std::uint64_t value() const { return value_; }
  int bit_count() const { return bit_count_; }

  std::uint64_t Reduce(std::uint64_t a) const { return a % value_; }
  std::uint64_t Reduce128(u128 x) const;

  std::uint64_t Add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= value_ ? s - value_ : s;
  }
  std::uint64_t Sub(std::uint64_t a, std::uint64_t b) const {
    return a >= b ? a - b : a + value_ - b;
  }
  std::uint64_t Neg(std::uint64_t a) const { return a == 0 ? 0 : value_ - a; }
  std::uint64_t Mul(std::uint64_t a, std::uint64_t b) const {
    return Reduce128(static_cast<u128>(a) * b);
  }
  std::uint64_t Pow(std::uint64_t base, std::uint64_t exp) const;
  // Requires gcd(a, q) = 1; q prime in practice.
  std::uint64_t Inverse(std::uint64_t a) const;

  std::uint64_t FromSigned(std::int64_t v) const;
  // Representative in (-q/2, q/2].
  std::int64_t Centered(std::uint64_t a) const {
    return a > value_ / 2 ? static_cast<std::int64_t>(a) - static_cast<std::int64_t>(value_)
                          : static_cast<std::int64_t>(a);
  }

  friend bool operator==(const Modulus& a, const Modulus& b) { return a.value_ == b.value_; }

 private:
  std::uint64_t value_;
  int bit_count_;
  // floor(2^128 / q) split into two words.
  std::uint64_t ratio_hi_;
  std::uint64_t ratio_lo_;
};

// Multiplication by a fixed operand with a precomputed Shoup quotient.
struct ShoupConstant {
  std::uint64_t operand = 0;
  std::uint64_t quotient = 0;  // floor(operand * 2^64 / q)
};

ShoupConstant MakeShoup(std::uint64_t operand, const Modulus& q);

inline std::uint64_t MulShoup(std::uint64_t a, const ShoupConstant& w, std::uint64_t q) {
  const auto hi = static_cast<std::uint64_t>((static_cast<u128>(a) * w.quotient) >> 64);
  const std::uint64_t r = a * w.operand - hi * q;
  return r >= q ? r - q : r;
}

// An NTT-friendly prime: q prime, q = 1 (mod 2 * n_max), together with the
// smallest primitive 2*n_max-th root of unity.
class PrimeModulus {
 public:
  // Throws std::invalid_argument if q is not prime, too wide, or lacks the
  // required congruence.
  PrimeModulus(std::uint64_t q, std::size_t n_max);

  const Modulus& modulus() const { return modulus_; }
  std::uint64_t value() const { return modulus_.value(); }
  std::size_t n_max() const { return n_max_; }
  std::uint64_t root() const { return root_; }

  // Primitive 2n-th root derived from root() for any power of two n <= n_max.
  std::uint64_t RootFor(std::size_t n) const;

 private:
  Modulus modulus_;
  std::size_t n_max_;
  std::uint64_t root_;
};

// Smallest prime with exactly bit_count bits that is 1 modulo congruence.
std::uint64_t FindNttPrime(int bit_count, std::uint64_t congruence);
// Smallest such prime strictly greater than after.
std::uint64_t NextNttPrime(std::uint64_t after, std::uint64_t congruence);

}  // namespace privread::ring

#endif  // PRIVREAD_RING_MODULUS_HPP_
