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

#include <compare>
#include <cstdint>

namespace facemill {

// A depth of cut held as an integer count of 0.01 mm. Divisibility tests on
// the depth grid are done on these counts, never on floating point.
class DepthTicks {
public:
  static constexpr double kQuantumMm = 0.01;
  static constexpr std::int64_t kPerMm = 100;

  constexpr DepthTicks() = default;
  constexpr explicit DepthTicks(std::int64_t count) : count_(count) {}

  // Throws InvalidInput when `mm` is not a whole number of quanta.
  static DepthTicks from_mm(double mm);

  constexpr std::int64_t count() const noexcept { return count_; }
  constexpr double mm() const noexcept {
    return static_cast<double>(count_) / static_cast<double>(kPerMm);
  }

  constexpr auto operator<=>(const DepthTicks&) const = default;

  constexpr DepthTicks operator+(DepthTicks o) const noexcept { return DepthTicks(count_ + o.count_); }
  constexpr DepthTicks operator-(DepthTicks o) const noexcept { return DepthTicks(count_ - o.count_); }
  constexpr DepthTicks operator*(std::int64_t k) const noexcept { return DepthTicks(count_ * k); }

private:
  std::int64_t count_ = 0;
};

} // namespace facemill
