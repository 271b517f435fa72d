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

#include <stdexcept>
#include <string>

namespace facemill {

// Non-positive or otherwise out-of-domain arguments.
class InvalidInput : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

// No (d_s, d_r, n) allocation removes the requested total depth.
class NoFeasibleAllocation : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

// A single pass cannot satisfy force/power limits anywhere in its box.
class InfeasiblePass : public std::runtime_error {
public:
  InfeasiblePass(std::string binding, const std::string& what)
      : std::runtime_error(what), binding_(std::move(binding)) {}

  const std::string& binding_constraint() const noexcept { return binding_; }

private:
  std::string binding_;
};

class EstimationFailure : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

} // namespace facemill
