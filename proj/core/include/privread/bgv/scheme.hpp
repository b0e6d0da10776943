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

#ifndef PRIVREAD_BGV_SCHEME_HPP_
#define PRIVREAD_BGV_SCHEME_HPP_

#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "privread/bgv/params.hpp"
#include "privread/common/random.hpp"
#include "privread/ring/ring_element.hpp"

namespace privread::bgv {

using ContextPtr = std::shared_ptr<const BgvContext>;

// A message in R_T viewed through its N plaintext slots. Slot i is the
// evaluation of the plaintext polynomial at the i-th NTT point mod T, so
// multiplying polynomials multiplies slots componentwise.
class Plaintext {
 public:
  // Throws std::invalid_argument if a slot is >= T or the length is not N.
  Plaintext(ContextPtr context, std::vector<std::uint64_t> slots, int level);

  const ContextPtr& context() const { return context_; }
  std::span<const std::uint64_t> slots() const { return slots_; }
  int level() const { return level_; }

  friend bool operator==(const Plaintext& a, const Plaintext& b) {
    return a.context_->params() == b.context_->params() && a.level_ == b.level_ &&
           a.slots_ == b.slots_;
  }

 private:
  ContextPtr context_;
  std::vector<std::uint64_t> slots_;
  int level_;
};

// Zero-pads to N. Throws std::invalid_argument when a value is >= T or more
// than N values are given.
Plaintext EncodeSlots(std::span<const std::uint64_t> values, const ContextPtr& context);
std::vector<std::uint64_t> DecodeSlots(const Plaintext& plaintext);

// Coefficients of the plaintext polynomial in R_T, and back.
ring::RingElement PlaintextPolynomial(const Plaintext& plaintext);
Plaintext PlaintextFromPolynomial(const ContextPtr& context, ring::RingElement polynomial,
                                  int level);

class SecretKey {
 public:
  // s is ternary; s_q and s_p are its lifts into R_q and R_p.
  SecretKey(ContextPtr context, ring::RingElement s_q, ring::RingElement s_p);

  const ContextPtr& context() const { return context_; }
  const ring::RingElement& s_q() const { return s_q_; }
  const ring::RingElement& s_p() const { return s_p_; }
  const ring::RingElement& s_q_ntt() const { return s_q_ntt_; }

  friend bool operator==(const SecretKey& a, const SecretKey& b) {
    return a.s_q_ == b.s_q_ && a.s_p_ == b.s_p_;
  }

 private:
  ContextPtr context_;
  ring::RingElement s_q_;
  ring::RingElement s_p_;
  ring::RingElement s_q_ntt_;
};

// (b, a) with b = -a*s + T*e, held in both the q and p limbs.
class PublicKey {
 public:
  PublicKey(ContextPtr context, ring::RingElement b_q, ring::RingElement a_q,
            ring::RingElement b_p, ring::RingElement a_p);

  const ContextPtr& context() const { return context_; }
  const ring::RingElement& b_q() const { return b_q_; }
  const ring::RingElement& a_q() const { return a_q_; }
  const ring::RingElement& b_p() const { return b_p_; }
  const ring::RingElement& a_p() const { return a_p_; }
  const ring::RingElement& b_q_ntt() const { return b_q_ntt_; }
  const ring::RingElement& a_q_ntt() const { return a_q_ntt_; }

  friend bool operator==(const PublicKey& a, const PublicKey& b) {
    return a.b_q_ == b.b_q_ && a.a_q_ == b.a_q_ && a.b_p_ == b.b_p_ && a.a_p_ == b.a_p_;
  }

 private:
  ContextPtr context_;
  ring::RingElement b_q_, a_q_, b_p_, a_p_;
  ring::RingElement b_q_ntt_, a_q_ntt_;
};

struct KeyPair {
  PublicKey public_key;
  SecretKey secret_key;
};

// (c0, c1) in the coefficient domain of R_q; decrypts as c0 + c1*s.
struct Ciphertext {
  ContextPtr context;
  ring::RingElement c0;
  ring::RingElement c1;
  int level = 0;
  // Set by Encrypt, cleared by evaluation. Not part of the wire format.
  bool is_fresh = true;
};

// A plaintext lifted into R_q and transformed once, ready for repeated
// ciphertext-plaintext products.
class PreparedPlaintext {
 public:
  explicit PreparedPlaintext(const Plaintext& plaintext);

  const ContextPtr& context() const { return context_; }
  const ring::RingElement& evaluation() const { return evaluation_; }
  int level() const { return level_; }

 private:
  ContextPtr context_;
  ring::RingElement evaluation_;
  int level_;
};

KeyPair KeyGen(const ContextPtr& context, RandomStream& rng);

Ciphertext Encrypt(const PublicKey& public_key, const Plaintext& plaintext, RandomStream& rng);

// Slot-wise product of the encrypted message and the plaintext. Runs the same
// sequence of ring operations whatever the inputs contain.
Ciphertext EvalCtPt(const Ciphertext& ciphertext, const PreparedPlaintext& plaintext);
Ciphertext EvalCtPt(const Ciphertext& ciphertext, const Plaintext& plaintext);

Plaintext Decrypt(const SecretKey& secret_key, const Ciphertext& ciphertext);

}  // namespace privread::bgv

#endif  // PRIVREAD_BGV_SCHEME_HPP_
