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

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "facemill/ga.hpp"
#include "facemill/model.hpp"

namespace facemill {

enum class SolverMode { oracle, ga };

const char* to_string(SolverMode mode) noexcept;

struct SolverOptions {
  SolverMode mode = SolverMode::oracle;
  GaConfig ga;
};

struct Optimum {
  Plan plan;
  double cost = 0.0;
};

// Best plan for one total depth with the selected engine.
Optimum solve(const Model& model, double total_depth, const SolverOptions& options);

enum class LimitKind { force, power };

const char* to_string(LimitKind kind) noexcept;

struct SensitivityPoint {
  LimitKind kind = LimitKind::force;
  double multiplier = 1.0;
  double cost = 0.0; // NaN when infeasible
  bool feasible = true;
  std::string note;
};

struct SensitivitySweep {
  std::vector<SensitivityPoint> points;
  // least-squares d(UC)/d(multiplier) over the feasible points
  std::optional<double> force_slope;
  std::optional<double> power_slope;
};

// Scales F_max or P_max by each multiplier and re-optimizes. Infeasible
// points are recorded and the sweep continues.
SensitivitySweep sensitivity_sweep(const Model& base, double total_depth, std::span<const LimitKind> kinds,
                                   std::span<const double> multipliers, const SolverOptions& options);

// Ordinary least-squares slope of y on x.
std::optional<double> least_squares_slope(std::span<const double> x, std::span<const double> y);

struct SweepRow {
  double total_depth = 0.0;
  Plan plan;
  double cost = 0.0;
  double finish_life = 0.0;
  double rough_life = 0.0;
};

struct DepthSweep {
  std::vector<SweepRow> rows;
  std::vector<double> skipped; // total depths with no feasible allocation
};

// One optimum per total depth on [from, to] in `step` increments.
DepthSweep dt_sweep(const Model& model, double from, double to, double step, const SolverOptions& options);

// Fixed settings used by the quick estimate. These hold only for the
// reference dataset and must be re-learned for other problems.
struct EstimateSettings {
  double finish_feed = 0.279;
  double finish_speed = 123.2;
  double rough_speed = 60.35;
  bool allow_extra_pass = false;
};

struct Estimate {
  Plan plan;
  double cost = 0.0;
  std::vector<std::string> notes;
};

// Closed-form estimate: fewest rough passes, shallowest rough depth for
// that count, rough feed at its tightest cap, fixed speeds and finish feed.
// Throws EstimationFailure.
Estimate estimate_plan(const Model& model, double total_depth, const EstimateSettings& settings = {});

} // namespace facemill
