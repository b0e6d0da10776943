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

#ifndef PRIVREAD_RING_OP_COUNTER_HPP_
#define PRIVREAD_RING_OP_COUNTER_HPP_

#include <cstdint>

namespace privread::ring {

// Per-thread tally of ring-level work. Used to show that server-side
// evaluation does the same amount of work for every query.
struct RingOpCounts {
  std::uint64_t forward_ntt = 0;
  std::uint64_t inverse_ntt = 0;
  std::uint64_t pointwise_mul = 0;
  std::uint64_t pointwise_add = 0;

  std::uint64_t Total() const { return forward_ntt + inverse_ntt + pointwise_mul + pointwise_add; }

  friend RingOpCounts operator-(const RingOpCounts& a, const RingOpCounts& b) {
    return {a.forward_ntt - b.forward_ntt, a.inverse_ntt - b.inverse_ntt,
            a.pointwise_mul - b.pointwise_mul, a.pointwise_add - b.pointwise_add};
  }
  friend bool operator==(const RingOpCounts&, const RingOpCounts&) = default;
};

RingOpCounts& ThreadRingOpCounts();

class ScopedRingOpCounter {
 public:
  ScopedRingOpCounter() : start_(ThreadRingOpCounts()) {}
  RingOpCounts Delta() const { return ThreadRingOpCounts() - start_; }

 private:
  RingOpCounts start_;
};

}  // namespace privread::ring

#endif  // PRIVREAD_RING_OP_COUNTER_HPP_
