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

#include "privread/pir/layout.hpp"

#include <algorithm>
#include <utility>

namespace privread::pir {

std::size_t ComputeRecordSlots(std::size_t record_bytes, std::size_t bytes_per_slot) {
  if (record_bytes == 0) throw std::invalid_argument("record length must be positive");
  if (bytes_per_slot == 0) throw std::invalid_argument("bytes per slot must be positive");
  const std::size_t per_bucket = 8 * bytes_per_slot;
  return 8 * ((record_bytes + per_bucket - 1) / per_bucket);
}

SlotLayout::SlotLayout(std::size_t n, std::size_t record_s, std::size_t n_ring)
    : n_(n), record_s_(record_s), n_ring_(n_ring) {
  if (n == 0 || record_s == 0) {
    throw PirError(PirErrorCode::kCapacityExceeded, "layout needs n >= 1 and record_s >= 1");
  }
  if (n > n_ring / record_s) {
    throw PirError(PirErrorCode::kCapacityExceeded,
                   "capacity exceeded: " + std::to_string(n) + " * " + std::to_string(record_s) +
                       " > " + std::to_string(n_ring));
  }
}

RecordSet::RecordSet(std::vector<std::string> records) : records_(std::move(records)) {
  if (records_.empty()) throw PirError(PirErrorCode::kInvalidRecord, "record set is empty");
  for (std::size_t i = 0; i < records_.size(); ++i) {
    if (records_[i].find('\0') != std::string::npos) {
      throw PirError(PirErrorCode::kInvalidRecord,
                     "record " + std::to_string(i) + " contains a zero byte");
    }
  }
}

std::size_t RecordSet::MaxLength() const {
  std::size_t max = 0;
  for (const auto& r : records_) max = std::max(max, r.size());
  return max;
}

std::vector<std::uint64_t> PackRecords(const RecordSet& records, const SlotLayout& layout) {
  if (records.size() > layout.n()) {
    throw PirError(PirErrorCode::kCapacityExceeded,
                   std::to_string(records.size()) + " records exceed layout size " +
                       std::to_string(layout.n()));
  }
  std::vector<std::uint64_t> packed(layout.n_ring(), 0);
  for (std::size_t i = 0; i < records.size(); ++i) {
    const std::string& record = records[i];
    if (record.size() > layout.record_s()) {
      throw PirError(PirErrorCode::kOversizeRecord,
                     "record " + std::to_string(i) + " has " + std::to_string(record.size()) +
                         " bytes, window is " + std::to_string(layout.record_s()));
    }
    const std::size_t base = layout.WindowBegin(i);
    for (std::size_t k = 0; k < record.size(); ++k) {
      packed[base + k] = static_cast<unsigned char>(record[k]);
    }
  }
  return packed;
}

bgv::Plaintext EncodeDatabase(const std::vector<std::uint64_t>& packed,
                              const bgv::ContextPtr& context) {
  if (packed.size() != context->n()) {
    throw std::invalid_argument("packed database has " + std::to_string(packed.size()) +
                                " slots, ring has " + std::to_string(context->n()));
  }
  return bgv::EncodeSlots(packed, context);
}

}  // namespace privread::pir
