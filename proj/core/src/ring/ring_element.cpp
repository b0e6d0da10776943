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

#include "privread/ring/ring_element.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "privread/ring/op_counter.hpp"

namespace privread::ring {
namespace {

void RequireSameRing(const RingElement& a, const RingElement& b) {
  if (!a.context()->SameRing(*b.context())) {
    throw std::invalid_argument("ring mismatch: (n=" + std::to_string(a.n()) +
                                ", q=" + std::to_string(a.q()) + ") vs (n=" +
                                std::to_string(b.n()) + ", q=" + std::to_string(b.q()) + ")");
  }
}

void RequireSameDomain(const RingElement& a, const RingElement& b) {
  RequireSameRing(a, b);
  if (a.domain() != b.domain()) throw std::invalid_argument("domain mismatch");
}

}  // namespace

std::shared_ptr<const RingContext> RingContext::Create(std::size_t n, std::uint64_t q) {
  return std::make_shared<const RingContext>(n, PrimeModulus(q, n));
}

RingContext::RingContext(std::size_t n, const PrimeModulus& prime)
    : prime_(prime), tables_(n, prime) {}

RingElement::RingElement(std::shared_ptr<const RingContext> context, Domain domain)
    : context_(std::move(context)), domain_(domain), values_(context_->n(), 0) {}

RingElement::RingElement(std::shared_ptr<const RingContext> context,
                         std::vector<std::uint64_t> values, Domain domain)
    : context_(std::move(context)), domain_(domain), values_(std::move(values)) {
  if (values_.size() != context_->n()) {
    throw std::invalid_argument("ring element has " + std::to_string(values_.size()) +
                                " values, ring dimension is " + std::to_string(context_->n()));
  }
  const std::uint64_t q = context_->q();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] >= q) {
      throw std::invalid_argument("value at index " + std::to_string(i) + " is not below q");
    }
  }
}

RingElement NttForward(RingElement x) {
  if (x.domain_ != Domain::kCoefficient) {
    throw std::invalid_argument("forward NTT expects a coefficient-domain element");
  }
  x.context_->tables().Forward(x.values_);
  x.domain_ = Domain::kEvaluation;
  return x;
}

RingElement NttInverse(RingElement x) {
  if (x.domain_ != Domain::kEvaluation) {
    throw std::invalid_argument("inverse NTT expects an evaluation-domain element");
  }
  x.context_->tables().Inverse(x.values_);
  x.domain_ = Domain::kCoefficient;
  return x;
}

RingElement ToDomain(RingElement x, Domain domain) {
  if (x.domain() == domain) return x;
  return domain == Domain::kEvaluation ? NttForward(std::move(x)) : NttInverse(std::move(x));
}

RingElement Add(const RingElement& a, const RingElement& b) {
  RequireSameDomain(a, b);
  RingElement out = a;
  const Modulus& mod = a.context_->modulus();
  for (std::size_t i = 0; i < out.values_.size(); ++i) {
    out.values_[i] = mod.Add(out.values_[i], b.values_[i]);
  }
  ++ThreadRingOpCounts().pointwise_add;
  return out;
}

RingElement Sub(const RingElement& a, const RingElement& b) {
  RequireSameDomain(a, b);
  RingElement out = a;
  const Modulus& mod = a.context_->modulus();
  for (std::size_t i = 0; i < out.values_.size(); ++i) {
    out.values_[i] = mod.Sub(out.values_[i], b.values_[i]);
  }
  ++ThreadRingOpCounts().pointwise_add;
  return out;
}

RingElement Negate(RingElement a) {
  const Modulus& mod = a.context_->modulus();
  for (auto& v : a.values_) v = mod.Neg(v);
  return a;
}

RingElement PointwiseMul(const RingElement& a, const RingElement& b) {
  RequireSameDomain(a, b);
  if (a.domain() != Domain::kEvaluation) {
    throw std::invalid_argument("pointwise product expects evaluation-domain operands");
  }
  RingElement out = a;
  const Modulus& mod = a.context_->modulus();
  for (std::size_t i = 0; i < out.values_.size(); ++i) {
    out.values_[i] = mod.Mul(out.values_[i], b.values_[i]);
  }
  ++ThreadRingOpCounts().pointwise_mul;
  return out;
}

RingElement MulScalar(RingElement a, std::uint64_t scalar) {
  const Modulus& mod = a.context_->modulus();
  const ShoupConstant w = MakeShoup(mod.Reduce(scalar), mod);
  for (auto& v : a.values_) v = MulShoup(v, w, mod.value());
  return a;
}

RingElement NegacyclicMul(const RingElement& a, const RingElement& b) {
  RequireSameRing(a, b);
  return NttInverse(
      PointwiseMul(ToDomain(a, Domain::kEvaluation), ToDomain(b, Domain::kEvaluation)));
}

RingElement FromSigned(std::shared_ptr<const RingContext> context,
                       std::span<const std::int64_t> coeffs) {
  const Modulus& mod = context->modulus();
  std::vector<std::uint64_t> values(coeffs.size());
  for (std::size_t i = 0; i < coeffs.size(); ++i) values[i] = mod.FromSigned(coeffs[i]);
  return RingElement(std::move(context), std::move(values), Domain::kCoefficient);
}

}  // namespace privread::ring
