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

#ifndef PRIVREAD_RING_RING_ELEMENT_HPP_
#define PRIVREAD_RING_RING_ELEMENT_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "privread/ring/modulus.hpp"
#include "privread/ring/ntt.hpp"

namespace privread::ring {

// The ring Z_q[X]/(X^n + 1) for one power-of-two n and one NTT prime q.
// Immutable once built; share it through std::shared_ptr.
class RingContext {
 public:
  static std::shared_ptr<const RingContext> Create(std::size_t n, std::uint64_t q);

  RingContext(std::size_t n, const PrimeModulus& prime);

  std::size_t n() const { return tables_.n(); }
  int log_n() const { return tables_.log_n(); }
  const Modulus& modulus() const { return tables_.modulus(); }
  std::uint64_t q() const { return tables_.modulus().value(); }
  const PrimeModulus& prime() const { return prime_; }
  const NttTables& tables() const { return tables_; }

  bool SameRing(const RingContext& other) const { return n() == other.n() && q() == other.q(); }

 private:
  PrimeModulus prime_;
  NttTables tables_;
};

enum class Domain { kCoefficient, kEvaluation };

// An element of R_q held either as coefficients or as NTT evaluations.
// Every stored value is strictly below q.
class RingElement {
 public:
  // The zero element.
  explicit RingElement(std::shared_ptr<const RingContext> context,
                       Domain domain = Domain::kCoefficient);
  // Throws std::invalid_argument on wrong length or a value >= q.
  RingElement(std::shared_ptr<const RingContext> context, std::vector<std::uint64_t> values,
              Domain domain);

  const std::shared_ptr<const RingContext>& context() const { return context_; }
  std::size_t n() const { return values_.size(); }
  std::uint64_t q() const { return context_->q(); }
  Domain domain() const { return domain_; }
  std::span<const std::uint64_t> values() const { return values_; }
  std::uint64_t operator[](std::size_t i) const { return values_[i]; }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.context_->SameRing(*b.context_) && a.domain_ == b.domain_ && a.values_ == b.values_;
  }

 private:
  friend RingElement NttForward(RingElement x);
  friend RingElement NttInverse(RingElement x);
  friend RingElement Add(const RingElement& a, const RingElement& b);
  friend RingElement Sub(const RingElement& a, const RingElement& b);
  friend RingElement Negate(RingElement a);
  friend RingElement PointwiseMul(const RingElement& a, const RingElement& b);
  friend RingElement MulScalar(RingElement a, std::uint64_t scalar);

  std::shared_ptr<const RingContext> context_;
  Domain domain_;
  std::vector<std::uint64_t> values_;
};

// Domain conversions. Both throw std::invalid_argument on the wrong input domain.
RingElement NttForward(RingElement x);
RingElement NttInverse(RingElement x);

RingElement ToDomain(RingElement x, Domain domain);

// Same ring and same domain required.
RingElement Add(const RingElement& a, const RingElement& b);
RingElement Sub(const RingElement& a, const RingElement& b);
RingElement Negate(RingElement a);
// Both operands in the evaluation domain.
RingElement PointwiseMul(const RingElement& a, const RingElement& b);
RingElement MulScalar(RingElement a, std::uint64_t scalar);

// Product in R_q for operands in any domain; result in the coefficient domain.
RingElement NegacyclicMul(const RingElement& a, const RingElement& b);

// Lift signed small coefficients (keys, errors) into R_q.
RingElement FromSigned(std::shared_ptr<const RingContext> context,
                       std::span<const std::int64_t> coeffs);

}  // namespace privread::ring

#endif  // PRIVREAD_RING_RING_ELEMENT_HPP_
