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

// Published reference numbers for the example face-milling problem, used
// as fixed expectations by the tests.

#include <array>

namespace facemill::testing {

struct PairRow {
  double d_s;
  double d_r;
  int n;
};

// Lookup table for d_t = 6 mm on the coarse 0.5 mm grid.
inline constexpr std::array<PairRow, 9> kCoarseTable{{
    {1, 0.5, 10},
    {1, 1, 5},
    {1, 2.5, 2},
    {1.5, 0.5, 9},
    {1.5, 1.5, 3},
    {2, 0.5, 8},
    {2, 1, 4},
    {2, 2, 2},
    {2, 4, 1},
}};

struct LocalOptimumRow {
  double d_s;
  double d_r;
  int n;
  double uc_s;
  double uc_r;
  double uc;
};

// Per-pair optimum costs at d_t = 6 mm on the coarse grid.
inline constexpr std::array<LocalOptimumRow, 9> kLocalOptima{{
    {1, 0.5, 10, 0.53660, 0.40794, 4.9910},
    {1, 1, 5, 0.53660, 0.34594, 2.6413},
    {1, 2.5, 2, 0.53660, 0.38123, 1.6741},
    {1.5, 0.5, 9, 0.55920, 0.40794, 4.6057},
    {1.5, 1.5, 3, 0.55920, 0.34733, 1.9762},
    {2, 0.5, 8, 0.57098, 0.40794, 4.2095},
    {2, 1, 4, 0.57098, 0.34594, 2.3297},
    {2, 2, 2, 0.57098, 0.36078, 1.6675},
    {2, 4, 1, 0.57098, 0.46420, 1.4102},
}};

inline constexpr double kReferenceGlobalOptimum = 1.4102;

struct SweepReferenceRow {
  double d_t;
  double V_s;
  double V_r;
  double f_s;
  double f_r;
  double d_s;
  double d_r;
  int n;
  double uc;
  double T_s;
  double T_r;
};

// Optimum operating points for d_t = 6..16 mm.
inline constexpr std::array<SweepReferenceRow, 11> kDepthSweep{{
    {6, 122.23, 60.12, 0.2791, 0.3187, 2, 4, 1, 1.4108, 222, 1274},
    {7, 122.38, 60.00, 0.2791, 0.5658, 2, 2.5, 2, 1.6914, 221, 853},
    {8, 124.46, 60.03, 0.2790, 0.4355, 1.8, 3.1, 2, 1.7615, 220, 1025},
    {9, 123.80, 63.27, 0.2790, 0.3499, 2, 3.5, 2, 1.8276, 213, 1044},
    {10, 123.40, 60.13, 0.2791, 0.3187, 2, 4, 2, 1.8830, 216, 1274},
    {11, 122.10, 60.03, 0.2790, 0.4533, 2, 3, 3, 2.1606, 223, 997},
    {12, 124.00, 60.05, 0.2789, 0.3890, 1.8, 3.4, 3, 2.2328, 223, 1110},
    {13, 122.92, 60.19, 0.2791, 0.3499, 1.9, 3.7, 3, 2.2940, 223, 1189},
    {14, 123.70, 60.13, 0.2789, 0.3187, 2, 4, 3, 2.3553, 214, 1274},
    {15, 123.89, 60.02, 0.2791, 0.4037, 1.8, 3.3, 4, 2.6396, 224, 1082},
    {16, 122.07, 60.03, 0.2790, 0.3757, 2, 3.5, 4, 2.6956, 223, 1138},
}};

inline constexpr double kAnChenD6 = 1.4858;
inline constexpr double kAnChenD8 = 1.8523;
inline constexpr double kShunmugamD8 = 2.0086;
inline constexpr double kQuotedGainAnChen = 5.2;
inline constexpr double kQuotedGainShunmugam = 14.0;

// Closed-form estimate at d_t = 11.5 mm.
inline constexpr double kEstimateDepth = 11.5;
inline constexpr double kEstimateRoughFeed = 0.424;
inline constexpr double kEstimateCost = 2.2194;

inline constexpr double kSchemaGainMax = 3.4885e19;
inline constexpr std::size_t kRecommendedPopulation = 750;

} // namespace facemill::testing
