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

#ifndef PRIVREAD_CLIENT_BENCH_HPP_
#define PRIVREAD_CLIENT_BENCH_HPP_

#include <cstddef>
#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace privread::client {

struct BenchOptions {
  std::string peer_url;
  std::vector<std::string> channels{"mini", "mid", "rich"};
  int reps = 20;
  std::filesystem::path out_dir = "bench-out";
  // Concurrent clients for the exhaustive correctness pass.
  int parallel = 1;
  bool exhaustive = true;
  // Query counts actually executed to check the projection's linearity.
  std::vector<int> linearity_counts{10, 100};
  std::ostream* progress = nullptr;
};

// A CSV-shaped table: fixed header, string cells.
struct Table {
  std::string file;
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string ToCsv() const;
  std::string ToMarkdown() const;
};

struct BenchReport {
  std::vector<Table> tables;
  std::vector<std::string> warnings;
  std::string summary_markdown;
};

// Runs the measurement suite against a live peer whose channels use the
// default parameter rows, writes one CSV per table and summary.md into
// out_dir, and returns the same content.
BenchReport RunBench(const BenchOptions& options);

}  // namespace privread::client

#endif  // PRIVREAD_CLIENT_BENCH_HPP_
