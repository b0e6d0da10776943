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

#ifndef PRIVREAD_RING_SAMPLING_HPP_
#define PRIVREAD_RING_SAMPLING_HPP_

#include <cstddef>
#include <cstdint>
#include <memory>
#include <vector>

#include "privread/common/random.hpp"
#include "privread/ring/ring_element.hpp"

namespace privread::ring {

inline constexpr double kErrorSigma = 3.2;
// Gaussian support is cut at floor(6 * sigma).
inline constexpr std::int64_t kErrorBound = 19;

// Signed draws, for values that must be lifted into more than one modulus.
std::vector<std::int64_t> SampleTernarySigned(std::size_t n, RandomStream& rng);
std::vector<std::int64_t> SampleErrorSigned(std::size_t n, RandomStream& rng);

RingElement SampleUniform(std::shared_ptr<const RingContext> context, RandomStream& rng);
RingElement SampleTernary(std::shared_ptr<const RingContext> context, RandomStream& rng);
RingElement SampleError(std::shared_ptr<const RingContext> context, RandomStream& rng);

}  // namespace privread::ring

#endif  // PRIVREAD_RING_SAMPLING_HPP_
