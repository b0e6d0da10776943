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

#include "privread/ring/ntt.hpp"

#include <bit>
#include <stdexcept>
#include <string>

#include "privread/ring/op_counter.hpp"

namespace privread::ring {

RingOpCounts& ThreadRingOpCounts() {
  thread_local RingOpCounts counts;
  return counts;
}

std::size_t BitReverse(std::size_t value, int bits) {
  std::size_t out = 0;
  for (int i = 0; i < bits; ++i) {
    out = (out << 1) | (value & 1);
    value >>= 1;
  }
  return out;
}

NttTables::NttTables(std::size_t n, const PrimeModulus& prime)
    : n_(n), log_n_(std::countr_zero(n)), modulus_(prime.modulus()), psi_(prime.RootFor(n)) {
  const std::uint64_t psi_inv = modulus_.Inverse(psi_);
  forward_.resize(n);
  inverse_.resize(n);
  std::uint64_t power = 1;
  std::uint64_t inv_power = 1;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t slot = BitReverse(i, log_n_);
    forward_[slot] = MakeShoup(power, modulus_);
    inverse_[slot] = MakeShoup(inv_power, modulus_);
    power = modulus_.Mul(power, psi_);
    inv_power = modulus_.Mul(inv_power, psi_inv);
  }
  n_inverse_ = MakeShoup(modulus_.Inverse(n), modulus_);
}

void NttTables::Forward(std::span<std::uint64_t> a) const {
  if (a.size() != n_) {
    throw std::invalid_argument("NTT length " + std::to_string(a.size()) +
                                " does not match table length " + std::to_string(n_));
  }
  const std::uint64_t q = modulus_.value();
  std::size_t t = n_;
  for (std::size_t m = 1; m < n_; m <<= 1) {
    t >>= 1;
    for (std::size_t i = 0; i < m; ++i) {
      const ShoupConstant& w = forward_[m + i];
      const std::size_t j1 = 2 * i * t;
      for (std::size_t j = j1; j < j1 + t; ++j) {
        const std::uint64_t u = a[j];
        const std::uint64_t v = MulShoup(a[j + t], w, q);
        a[j] = modulus_.Add(u, v);
        a[j + t] = modulus_.Sub(u, v);
      }
    }
  }
  ++ThreadRingOpCounts().forward_ntt;
}

void NttTables::Inverse(std::span<std::uint64_t> a) const {
  if (a.size() != n_) {
    throw std::invalid_argument("NTT length " + std::to_string(a.size()) +
                                " does not match table length " + std::to_string(n_));
  }
  const std::uint64_t q = modulus_.value();
  std::size_t t = 1;
  for (std::size_t m = n_; m > 1; m >>= 1) {
    const std::size_t h = m >> 1;
    std::size_t j1 = 0;
    for (std::size_t i = 0; i < h; ++i) {
      const ShoupConstant& w = inverse_[h + i];
      for (std::size_t j = j1; j < j1 + t; ++j) {
        const std::uint64_t u = a[j];
        const std::uint64_t v = a[j + t];
        a[j] = modulus_.Add(u, v);
        a[j + t] = MulShoup(modulus_.Sub(u, v), w, q);
      }
      j1 += 2 * t;
    }
    t <<= 1;
  }
  for (auto& x : a) x = MulShoup(x, n_inverse_, q);
  ++ThreadRingOpCounts().inverse_ntt;
}

}  // namespace privread::ring
