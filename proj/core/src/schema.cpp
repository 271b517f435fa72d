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

#include "facemill/schema.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "facemill/error.hpp"

namespace facemill {

std::size_t max_schema_length() noexcept {
  return static_cast<std::size_t>(std::log(std::numeric_limits<long double>::max()) / std::log(3.0L)) - 1;
}

long double schema_count(std::size_t mu, std::size_t l) {
  if (mu < 1 || l < 1) {
    throw InvalidInput("schema count needs mu >= 1 and l >= 1");
  }
  if (l > max_schema_length()) {
    throw InvalidInput("string length " + std::to_string(l) + " exceeds the representable range");
  }
  const long double m = static_cast<long double>(mu);
  long double binom = 1.0L; // C(l, i)
  long double pow2 = 1.0L;  // 2^i
  long double sum = 1.0L;   // i = 0: the all-wildcard schema is always present
  for (std::size_t i = 1; i <= l; ++i) {
    binom = binom * static_cast<long double>(l - i + 1) / static_cast<long double>(i);
    pow2 *= 2.0L;
    // 1 - (1 - 2^-i)^mu without cancellation
    const long double bracket = -std::expm1(m * std::log1p(-1.0L / pow2));
    sum += binom * pow2 * bracket;
  }
  return sum;
}

long double population_gain(std::size_t mu, std::size_t l) {
  const long double s = schema_count(mu, l);
  return (s - std::ldexp(1.0L, static_cast<int>(l))) / static_cast<long double>(mu);
}

std::vector<std::size_t> population_grid(std::size_t limit) {
  std::vector<std::size_t> grid;
  for (std::size_t mu = 1; mu <= 256 && mu <= limit; mu *= 2) {
    grid.push_back(mu);
  }
  for (std::size_t mu = 260; mu <= limit; mu += 10) {
    grid.push_back(mu);
  }
  return grid;
}

PopulationSizing size_population(std::size_t l, std::size_t limit, double fraction) {
  PopulationSizing out;
  out.max_gain = -std::numeric_limits<long double>::infinity();
  for (const auto mu : population_grid(limit)) {
    const long double g = population_gain(mu, l);
    out.curve.push_back({mu, g});
    if (g > out.max_gain) {
      out.max_gain = g;
      out.argmax = mu;
    }
  }
  const long double threshold = static_cast<long double>(fraction) * out.max_gain;
  for (const auto& p : out.curve) {
    if (p.gain >= threshold) {
      out.recommended = p.mu;
      break;
    }
  }
  return out;
}

std::size_t recommend_population(std::size_t l) { return size_population(l).recommended; }

} // namespace facemill
