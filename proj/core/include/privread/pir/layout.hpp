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

#ifndef PRIVREAD_PIR_LAYOUT_HPP_
#define PRIVREAD_PIR_LAYOUT_HPP_

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "privread/bgv/scheme.hpp"

namespace privread::pir {

enum class PirErrorCode {
  kIndexOutOfRange,
  kCapacityExceeded,
  kOversizeRecord,
  kInvalidRecord,
  kMalformedResponse,
};

class PirError : public std::runtime_error {
 public:
  PirError(PirErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  PirErrorCode code() const { return code_; }

 private:
  PirErrorCode code_;
};

// Slots per record: 8 * ceil(record_bytes / (8 * bytes_per_slot)). Each slot
// carries one byte. Throws std::invalid_argument for zero.
std::size_t ComputeRecordSlots(std::size_t record_bytes, std::size_t bytes_per_slot = 1);

// Fixed-width windows: record i owns slots [i * record_s, (i + 1) * record_s).
class SlotLayout {
 public:
  // Throws PirError(kCapacityExceeded) when n * record_s > n_ring.
  SlotLayout(std::size_t n, std::size_t record_s, std::size_t n_ring);

  std::size_t n() const { return n_; }
  std::size_t record_s() const { return record_s_; }
  std::size_t n_ring() const { return n_ring_; }
  std::size_t WindowBegin(std::size_t i) const { return i * record_s_; }
  std::size_t WindowEnd(std::size_t i) const { return (i + 1) * record_s_; }

  friend bool operator==(const SlotLayout&, const SlotLayout&) = default;

 private:
  std::size_t n_;
  std::size_t record_s_;
  std::size_t n_ring_;
};

// An ordered, non-empty list of serialized records. A zero byte would end a
// record early on retrieval, so none is allowed.
class RecordSet {
 public:
  // Throws PirError(kInvalidRecord) on an empty set or a record containing a zero byte.
  explicit RecordSet(std::vector<std::string> records);

  std::size_t size() const { return records_.size(); }
  const std::string& operator[](std::size_t i) const { return records_[i]; }
  const std::vector<std::string>& records() const { return records_; }
  std::size_t MaxLength() const;

 private:
  std::vector<std::string> records_;
};

// Byte k of record i goes to slot i * record_s + k; every other slot is 0.
// Throws PirError(kOversizeRecord) if a record is longer than record_s, and
// PirError(kCapacityExceeded) if the set is larger than the layout.
std::vector<std::uint64_t> PackRecords(const RecordSet& records, const SlotLayout& layout);

// Slot vector to plaintext. Throws std::invalid_argument if |c| != N or a value >= T.
bgv::Plaintext EncodeDatabase(const std::vector<std::uint64_t>& packed,
                              const bgv::ContextPtr& context);

}  // namespace privread::pir

#endif  // PRIVREAD_PIR_LAYOUT_HPP_
