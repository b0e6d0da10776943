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

#ifndef PRIVREAD_PIR_FEASIBILITY_HPP_
#define PRIVREAD_PIR_FEASIBILITY_HPP_

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace privread::pir {

// The closed set of permitted slot windows.
inline constexpr std::array<std::size_t, 6> kAllowedRecordSlots = {64, 128, 224, 256, 384, 512};
inline constexpr std::array<int, 3> kSupportedLogN = {13, 14, 15};

// Minimum record budget of a record template: base structure, mandatory
// fields, serialization overhead.
struct TemplateSpec {
  std::string name;
  std::size_t base_bytes = 0;
  std::vector<std::size_t> field_lengths;
  std::size_t overhead_bytes = 0;
  int log_n = 13;

  static TemplateSpec Mini();  // 81 + {32} + 15
  static TemplateSpec Mid();   // 161 + {32, 16} + 15
  static TemplateSpec Rich();  // 145 + {32, 64} + 15
  // Throws std::invalid_argument for an unknown name.
  static TemplateSpec ByName(const std::string& name);
};

std::size_t TemplateMinimum(const TemplateSpec& spec);

struct FeasibilityReport {
  bool capacity_ok = false;  // n * s <= N
  bool minimum_ok = false;   // s >= template minimum
  bool discrete_ok = false;  // s in the allowed set
  bool feasible = false;
  // Name of the first failing predicate ("capacity", "template-minimum",
  // "discrete-allocation"), empty when feasible.
  std::string detail;
};

FeasibilityReport CheckFeasibility(int log_n, std::size_t record_s, std::size_t n,
                                   const TemplateSpec& spec);

// Smallest supported log N with n * record_s <= 2^log_n.
std::optional<int> SelectMinLogN(std::size_t n, std::size_t record_s);

// Largest n with n * record_s <= 2^log_n.
std::size_t MaxRecords(int log_n, std::size_t record_s);

}  // namespace privread::pir

#endif  // PRIVREAD_PIR_FEASIBILITY_HPP_
