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

#include <cstddef>
#include <vector>

namespace facemill {

// Number of schemata represented by mu random strings of length l:
//   S = sum_i C(l, i) 2^i (1 - (1 - 2^-i)^mu)
// Accumulated in long double; terms never exceed 3^l, and l is checked
// against the long double range.
long double schema_count(std::size_t mu, std::size_t l);

// G = (S(mu, l) - 2^l) / mu
long double population_gain(std::size_t mu, std::size_t l);

// Largest string length whose 3^l fits in long double.
std::size_t max_schema_length() noexcept;

struct GainPoint {
  std::size_t mu = 0;
  long double gain = 0.0L;
};

struct PopulationSizing {
  std::vector<GainPoint> curve;
  std::size_t argmax = 0;
  long double max_gain = 0.0L;
  std::size_t recommended = 0; // smallest mu with G >= fraction * max
};

// Powers of two up to 256, then every 10 up to `limit`.
std::vector<std::size_t> population_grid(std::size_t limit = 5000);

PopulationSizing size_population(std::size_t l, std::size_t limit = 5000, double fraction = 0.999);

std::size_t recommend_population(std::size_t l);

} // namespace facemill
