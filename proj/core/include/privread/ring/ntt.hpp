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

#ifndef PRIVREAD_RING_NTT_HPP_
#define PRIVREAD_RING_NTT_HPP_

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "privread/ring/modulus.hpp"

namespace privread::ring {

// Twiddle tables for the negacyclic NTT of length n over Z_q.
//
// Forward output index k holds the evaluation of the input polynomial at
// psi^(2 * bitrev(k) + 1), where psi is the primitive 2n-th root
// PrimeModulus::RootFor(n) and bitrev reverses log2(n) bits. Any product in
// Z_q[X]/(X^n + 1) becomes a pointwise product in this domain.
class NttTables {
 public:
  NttTables(std::size_t n, const PrimeModulus& prime);

  std::size_t n() const { return n_; }
  int log_n() const { return log_n_; }
  const Modulus& modulus() const { return modulus_; }
  std::uint64_t psi() const { return psi_; }
  std::uint64_t n_inverse() const { return n_inverse_.operand; }
  std::span<const ShoupConstant> forward_twiddles() const { return forward_; }
  std::span<const ShoupConstant> inverse_twiddles() const { return inverse_; }

  // In place; inputs and outputs are fully reduced.
  void Forward(std::span<std::uint64_t> values) const;
  void Inverse(std::span<std::uint64_t> values) const;

 private:
  std::size_t n_;
  int log_n_;
  Modulus modulus_;
  std::uint64_t psi_;
  std::vector<ShoupConstant> forward_;  // psi^bitrev(k)
  std::vector<ShoupConstant> inverse_;  // psi^-bitrev(k)
  ShoupConstant n_inverse_;
};

std::size_t BitReverse(std::size_t value, int bits);

}  // namespace privread::ring

#endif  // PRIVREAD_RING_NTT_HPP_
