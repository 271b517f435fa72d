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

#include <gtest/gtest.h>

#include <cmath>

#include "facemill/error.hpp"
#include "facemill/schema.hpp"

namespace facemill {
namespace {

TEST(Schema, SingleStringHoldsTwoToTheL) {
  EXPECT_EQ(schema_count(1, 1), 2.0L);
  for (std::size_t l = 1; l <= 30; ++l) {
    EXPECT_NEAR(static_cast<double>(schema_count(1, l) / std::ldexp(1.0L, static_cast<int>(l))), 1.0, 1e-15);
    EXPECT_NEAR(static_cast<double>(population_gain(1, l)), 0.0, 1e-6);
  }
}

TEST(Schema, LargePopulationApproachesThreeToTheL) {
  EXPECT_NEAR(static_cast<double>(schema_count(1000000, 4)), 81.0, 1e-9);
  EXPECT_NEAR(static_cast<double>(schema_count(1000000, 10)), std::pow(3.0, 10), 1e-3);
}

TEST(Schema, SmallCaseByHand) {
  // l = 2, mu = 2: 1 + 2*2*(1 - 1/4) + 1*4*(1 - 9/16)
  EXPECT_NEAR(static_cast<double>(schema_count(2, 2)), 1.0 + 3.0 + 1.75, 1e-15);
}

TEST(Schema, GainAtReferenceLength) {
  const double g5000 = static_cast<double>(population_gain(5000, 65));
  EXPECT_NEAR(g5000 / 3.68854e19, 1.0, 1e-5);
  const double g750 = static_cast<double>(population_gain(750, 65));
  EXPECT_NEAR(g750 / g5000, 0.998882, 1e-6);
  // the gain peaks near mu = 10^4 and falls slowly after
  const double g1e4 = static_cast<double>(population_gain(10000, 65));
  EXPECT_GT(g1e4, g5000);
  EXPECT_GT(g1e4, static_cast<double>(population_gain(100000, 65)));
  EXPECT_NEAR(static_cast<double>(population_gain(50000, 65)) / 3.68861145e19, 1.0, 1e-8);
}

TEST(Schema, SizingOnDefaultGrid) {
  const auto s = size_population(65);
  EXPECT_EQ(s.argmax, 5000u);
  EXPECT_EQ(s.recommended, 830u);
  EXPECT_EQ(s.curve.front().mu, 1u);
  EXPECT_EQ(s.curve.back().mu, 5000u);
  EXPECT_EQ(recommend_population(65), 830u);
}

TEST(Schema, GridShape) {
  const auto g = population_grid(300);
  const std::vector<std::size_t> want{1, 2, 4, 8, 16, 32, 64, 128, 256, 260, 270, 280, 290, 300};
  EXPECT_EQ(g, want);
}

TEST(Schema, RejectsOutOfRange) {
  EXPECT_THROW(schema_count(0, 10), InvalidInput);
  EXPECT_THROW(schema_count(10, 0), InvalidInput);
  EXPECT_THROW(schema_count(10, max_schema_length() + 1), InvalidInput);
  EXPECT_NO_THROW(schema_count(10, max_schema_length()));
}

} // namespace
} // namespace facemill
