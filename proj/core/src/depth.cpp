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

#include "facemill/depth.hpp"

#include <cmath>
#include <string>

#include "facemill/error.hpp"

namespace facemill {

DepthTicks DepthTicks::from_mm(double mm) {
  if (!std::isfinite(mm)) {
    throw InvalidInput("depth must be finite");
  }
  const double scaled = mm * static_cast<double>(kPerMm);
  const double nearest = std::round(scaled);
  if (std::abs(scaled - nearest) > 1e-6) {
    throw InvalidInput("depth " + std::to_string(mm) + " mm is not a multiple of 0.01 mm");
  }
  return DepthTicks(static_cast<std::int64_t>(nearest));
}

} // namespace facemill
