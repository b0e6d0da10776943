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

#ifndef PRIVREAD_LEDGER_RECORDS_HPP_
#define PRIVREAD_LEDGER_RECORDS_HPP_

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace privread::ledger {

// Deterministic synthetic threat-intelligence records for a template
// ("mini", "mid" or "rich"). Every record is compact JSON without zero bytes,
// at most max_bytes long and at least max_bytes - 7 long, so the slot window
// derived from the records equals the one derived from max_bytes.
std::vector<std::string> GenerateRecords(std::size_t n, std::size_t max_bytes,
                                         const std::string& template_name, std::uint64_t seed);

}  // namespace privread::ledger

#endif  // PRIVREAD_LEDGER_RECORDS_HPP_
