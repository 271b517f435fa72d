// Copyright 2026 The facemill Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "facemill/app/config.hpp"

namespace facemill::app {

class IoError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

struct CsvDocument {
  std::string name; // file stem
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  // printed on stdout when no output directory is given
  bool primary = true;

  std::string render() const;
};

// Fully resolved inputs of one invocation, written next to its outputs.
struct RunManifest {
  std::string subcommand;
  std::vector<std::string> arguments;
  Settings settings;
  std::vector<std::uint64_t> seeds;
  std::vector<std::string> outputs;

  // Comment header plus the effective configuration; loadable as a config.
  std::string render() const;
};

struct Report {
  std::vector<CsvDocument> tables;
  std::vector<std::string> summary;
};

// Writes <dir>/<name>.csv per table, summary.txt and manifest.cfg; without
// a directory, primary tables go to `out` and the summary to `err`.
void emit_report(const Report& report, RunManifest manifest, const std::optional<std::filesystem::path>& out_dir,
                 std::ostream& out, std::ostream& err);

// Published unit costs of earlier two-stage methods, quoted for comparison.
struct LiteratureValue {
  double total_depth;
  const char* source;
  double unit_cost;
};

const std::vector<LiteratureValue>& literature_values();

// (reference - ours) / ours, in percent.
double improvement_percent(double reference, double ours);

std::vector<std::string> comparison_lines(double total_depth, double unit_cost);

} // namespace facemill::app
