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

#include "privread/bgv/scheme.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "privread/ring/sampling.hpp"

namespace privread::bgv {
namespace {

using ring::Domain;
using ring::RingElement;

// Centered lift of an R_T polynomial into R_q.
RingElement LiftPlaintext(const BgvContext& context, const RingElement& poly_t) {
  const ring::Modulus& t = context.ring_t()->modulus();
  const ring::Modulus& q = context.ring_q()->modulus();
  std::vector<std::uint64_t> lifted(poly_t.n());
  for (std::size_t i = 0; i < lifted.size(); ++i) lifted[i] = q.FromSigned(t.Centered(poly_t[i]));
  return RingElement(context.ring_q(), std::move(lifted), Domain::kCoefficient);
}

void RequireCiphertextRing(const BgvContext& context, const Ciphertext& ct) {
  RequireSameParams(context, *ct.context);
  if (!ct.c0.context()->SameRing(*context.ring_q()) ||
      !ct.c1.context()->SameRing(*context.ring_q())) {
    throw std::invalid_argument("ciphertext does not belong to the parameter set");
  }
  if (ct.c0.domain() != Domain::kCoefficient || ct.c1.domain() != Domain::kCoefficient) {
    throw std::invalid_argument("ciphertext components must be in the coefficient domain");
  }
}

}  // namespace

Plaintext::Plaintext(ContextPtr context, std::vector<std::uint64_t> slots, int level)
    : context_(std::move(context)), slots_(std::move(slots)), level_(level) {
  if (slots_.size() != context_->n()) {
    throw std::invalid_argument("plaintext must hold exactly N slots");
  }
  for (std::size_t i = 0; i < slots_.size(); ++i) {
    if (slots_[i] >= context_->t()) {
      throw std::invalid_argument("slot " + std::to_string(i) + " value " +
                                  std::to_string(slots_[i]) + " is not below T");
    }
  }
  if (level_ < 0 || level_ > context_->params().max_level()) {
    throw std::invalid_argument("plaintext level out of range");
  }
}

Plaintext EncodeSlots(std::span<const std::uint64_t> values, const ContextPtr& context) {
  if (values.size() > context->n()) {
    throw std::invalid_argument("cannot encode " + std::to_string(values.size()) +
                                " values into " + std::to_string(context->n()) + " slots");
  }
  std::vector<std::uint64_t> slots(context->n(), 0);
  std::copy(values.begin(), values.end(), slots.begin());
  return Plaintext(context, std::move(slots), context->params().max_level());
}

std::vector<std::uint64_t> DecodeSlots(const Plaintext& plaintext) {
  return {plaintext.slots().begin(), plaintext.slots().end()};
}

RingElement PlaintextPolynomial(const Plaintext& plaintext) {
  const auto& ring_t = plaintext.context()->ring_t();
  return ring::NttInverse(RingElement(
      ring_t, std::vector<std::uint64_t>(plaintext.slots().begin(), plaintext.slots().end()),
      Domain::kEvaluation));
}

Plaintext PlaintextFromPolynomial(const ContextPtr& context, RingElement polynomial, int level) {
  if (!polynomial.context()->SameRing(*context->ring_t())) {
    throw std::invalid_argument("polynomial is not in R_T");
  }
  RingElement slots = ring::ToDomain(std::move(polynomial), Domain::kEvaluation);
  return Plaintext(context, std::vector<std::uint64_t>(slots.values().begin(), slots.values().end()),
                   level);
}

SecretKey::SecretKey(ContextPtr context, RingElement s_q, RingElement s_p)
    : context_(std::move(context)),
      s_q_(std::move(s_q)),
      s_p_(std::move(s_p)),
      s_q_ntt_(ring::NttForward(s_q_)) {
  if (!s_q_.context()->SameRing(*context_->ring_q()) ||
      !s_p_.context()->SameRing(*context_->ring_p())) {
    throw std::invalid_argument("secret key limbs do not match the parameter set");
  }
}

PublicKey::PublicKey(ContextPtr context, RingElement b_q, RingElement a_q, RingElement b_p,
                     RingElement a_p)
    : context_(std::move(context)),
      b_q_(std::move(b_q)),
      a_q_(std::move(a_q)),
      b_p_(std::move(b_p)),
      a_p_(std::move(a_p)),
      b_q_ntt_(ring::NttForward(b_q_)),
      a_q_ntt_(ring::NttForward(a_q_)) {
  if (!a_q_.context()->SameRing(*context_->ring_q()) ||
      !a_p_.context()->SameRing(*context_->ring_p()) ||
      !b_p_.context()->SameRing(*context_->ring_p())) {
    throw std::invalid_argument("public key limbs do not match the parameter set");
  }
}

PreparedPlaintext::PreparedPlaintext(const Plaintext& plaintext)
    : context_(plaintext.context()),
      evaluation_(ring::NttForward(LiftPlaintext(*context_, PlaintextPolynomial(plaintext)))),
      level_(plaintext.level()) {}

KeyPair KeyGen(const ContextPtr& context, RandomStream& rng) {
  const std::size_t n = context->n();
  const std::uint64_t t = context->t();
  const auto s = ring::SampleTernarySigned(n, rng);
  const auto e = ring::SampleErrorSigned(n, rng);

  // b = -a*s + t*e, computed independently in each limb.
  auto make_limb = [&](const std::shared_ptr<const ring::RingContext>& ring_ctx) {
    RingElement s_limb = ring::FromSigned(ring_ctx, s);
    RingElement a = ring::SampleUniform(ring_ctx, rng);
    RingElement te = ring::MulScalar(ring::FromSigned(ring_ctx, e), t);
    RingElement b = ring::Add(ring::Negate(ring::NegacyclicMul(a, s_limb)), te);
    return std::tuple{std::move(s_limb), std::move(a), std::move(b)};
  };
  auto [s_q, a_q, b_q] = make_limb(context->ring_q());
  auto [s_p, a_p, b_p] = make_limb(context->ring_p());

  return KeyPair{
      PublicKey(context, std::move(b_q), std::move(a_q), std::move(b_p), std::move(a_p)),
      SecretKey(context, std::move(s_q), std::move(s_p))};
}

Ciphertext Encrypt(const PublicKey& public_key, const Plaintext& plaintext, RandomStream& rng) {
  const BgvContext& context = *public_key.context();
  RequireSameParams(context, *plaintext.context());
  const auto& ring_q = context.ring_q();
  const std::uint64_t t = context.t();

  const RingElement u = ring::NttForward(ring::SampleTernary(ring_q, rng));
  const RingElement e0 = ring::MulScalar(ring::SampleError(ring_q, rng), t);
  const RingElement e1 = ring::MulScalar(ring::SampleError(ring_q, rng), t);
  // The message sits in the low digits; its representative mod q only has to
  // be congruent mod T.
  const RingElement m = LiftPlaintext(context, PlaintextPolynomial(plaintext));

  RingElement c0 = ring::NttInverse(ring::PointwiseMul(public_key.b_q_ntt(), u));
  c0 = ring::Add(ring::Add(c0, e0), m);
  RingElement c1 = ring::NttInverse(ring::PointwiseMul(public_key.a_q_ntt(), u));
  c1 = ring::Add(c1, e1);
  return Ciphertext{public_key.context(), std::move(c0), std::move(c1), plaintext.level(), true};
}

Ciphertext EvalCtPt(const Ciphertext& ciphertext, const PreparedPlaintext& plaintext) {
  const BgvContext& context = *plaintext.context();
  RequireCiphertextRing(context, ciphertext);
  if (ciphertext.level != plaintext.level()) {
    throw std::invalid_argument("ciphertext level " + std::to_string(ciphertext.level) +
                                " does not match plaintext level " +
                                std::to_string(plaintext.level()));
  }
  RingElement c0 = ring::NttInverse(
      ring::PointwiseMul(ring::NttForward(ciphertext.c0), plaintext.evaluation()));
  RingElement c1 = ring::NttInverse(
      ring::PointwiseMul(ring::NttForward(ciphertext.c1), plaintext.evaluation()));
  return Ciphertext{ciphertext.context, std::move(c0), std::move(c1), ciphertext.level, false};
}

Ciphertext EvalCtPt(const Ciphertext& ciphertext, const Plaintext& plaintext) {
  return EvalCtPt(ciphertext, PreparedPlaintext(plaintext));
}

Plaintext Decrypt(const SecretKey& secret_key, const Ciphertext& ciphertext) {
  const BgvContext& context = *secret_key.context();
  RequireCiphertextRing(context, ciphertext);
  const RingElement c1s =
      ring::NttInverse(ring::PointwiseMul(ring::NttForward(ciphertext.c1), secret_key.s_q_ntt()));
  const RingElement phase = ring::Add(ciphertext.c0, c1s);

  const ring::Modulus& q = context.ring_q()->modulus();
  const ring::Modulus& t = context.ring_t()->modulus();
  std::vector<std::uint64_t> poly(phase.n());
  for (std::size_t i = 0; i < poly.size(); ++i) poly[i] = t.FromSigned(q.Centered(phase[i]));
  return PlaintextFromPolynomial(
      secret_key.context(), RingElement(context.ring_t(), std::move(poly), Domain::kCoefficient),
      ciphertext.level);
}

}  // namespace privread::bgv
