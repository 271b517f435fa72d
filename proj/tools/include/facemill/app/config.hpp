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

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "facemill/ga.hpp"
#include "facemill/model.hpp"
#include "facemill/problem.hpp"

namespace facemill::app {

class ConfigError : public std::runtime_error {
public:
  ConfigError(std::string key, const std::string& what) : std::runtime_error(what), key_(std::move(key)) {}
  const std::string& key() const noexcept { return key_; }

private:
  std::string key_;
};

// Everything a run consumes: process data, coefficient mode, GA settings.
struct Settings {
  ProblemData problem;
  CoefficientSource coefficients = CoefficientSource::derived;
  GaConfig ga;
};

// Parses `key = value` lines over `base`. '#' starts a comment. Unknown
// keys, unparsable values and violated invariants raise ConfigError.
Settings parse_config(std::string_view text, Settings base = {});

// Defaults overridden by the file at `path`, if any.
Settings load_config(const std::optional<std::filesystem::path>& path);

// Assigns one key; same rules as parse_config.
void set_key(Settings& settings, std::string_view key, std::string_view value);

// Re-validates the merged settings (after command-line overrides).
void check(const Settings& settings);

// Every recognised key with its effective value, one `key = value` per
// line, in a fixed order. Parsing the echo reproduces the settings.
std::string echo_config(const Settings& settings);

std::vector<std::string> config_keys();

} // namespace facemill::app
