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

#include "privread/pir/feasibility.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace privread::pir {

TemplateSpec TemplateSpec::Mini() { return {"mini", 81, {32}, 15, 13}; }
TemplateSpec TemplateSpec::Mid() { return {"mid", 161, {32, 16}, 15, 14}; }
TemplateSpec TemplateSpec::Rich() { return {"rich", 145, {32, 64}, 15, 15}; }

TemplateSpec TemplateSpec::ByName(const std::string& name) {
  if (name == "mini") return Mini();
  if (name == "mid") return Mid();
  if (name == "rich") return Rich();
  throw std::invalid_argument("unknown record template '" + name + "'");
}

std::size_t TemplateMinimum(const TemplateSpec& spec) {
  return spec.base_bytes +
         std::accumulate(spec.field_lengths.begin(), spec.field_lengths.end(), std::size_t{0}) +
         spec.overhead_bytes;
}

FeasibilityReport CheckFeasibility(int log_n, std::size_t record_s, std::size_t n,
                                   const TemplateSpec& spec) {
  FeasibilityReport report;
  const std::size_t ring = std::size_t{1} << log_n;
  report.capacity_ok = record_s != 0 && n <= ring / record_s;
  report.minimum_ok = record_s >= TemplateMinimum(spec);
  report.discrete_ok = std::find(kAllowedRecordSlots.begin(), kAllowedRecordSlots.end(),
                                 record_s) != kAllowedRecordSlots.end();
  report.feasible = report.capacity_ok && report.minimum_ok && report.discrete_ok;
  if (!report.capacity_ok) {
    report.detail = "capacity";
  } else if (!report.minimum_ok) {
    report.detail = "template-minimum";
  } else if (!report.discrete_ok) {
    report.detail = "discrete-allocation";
  }
  return report;
}

std::optional<int> SelectMinLogN(std::size_t n, std::size_t record_s) {
  for (int log_n : kSupportedLogN) {
    if (n * record_s <= (std::size_t{1} << log_n)) return log_n;
  }
  return std::nullopt;
}

std::size_t MaxRecords(int log_n, std::size_t record_s) {
  if (record_s == 0) throw std::invalid_argument("record_s must be positive");
  return (std::size_t{1} << log_n) / record_s;
}

}  // namespace privread::pir
