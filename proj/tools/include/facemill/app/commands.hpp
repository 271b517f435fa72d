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
#include <span>
#include <vector>

#include "facemill/analysis.hpp"
#include "facemill/app/config.hpp"
#include "facemill/app/report.hpp"
#include "facemill/oracle.hpp"

namespace facemill::app {

// Subcommand bodies. Each returns the tables and summary the CLI emits.

Report derive_command(const Settings& settings);

Report table_command(const Settings& settings, double total_depth);

// runs > 1 uses seeds seed, seed+1, ... and reports the success rate
// against the oracle.
Report optimize_command(const Settings& settings, double total_depth, std::size_t runs = 1);

Report oracle_command(const Settings& settings, double total_depth, PassMethod method = PassMethod::candidates);

Report sweep_command(const Settings& settings, double from, double to, double step,
                     SolverMode mode = SolverMode::oracle);

Report sensitivity_command(const Settings& settings, double total_depth, std::span<const LimitKind> kinds,
                           std::span<const double> multipliers, SolverMode mode = SolverMode::oracle);

Report estimate_command(const Settings& settings, double total_depth, const EstimateSettings& estimate = {});

Report popsize_command(std::size_t string_length, std::size_t limit = 5000);

struct SuccessPoint {
  double mutation_prob = 0.0;
  std::size_t runs = 0;
  std::size_t successes = 0;
  double global_cost = 0.0;

  double rate() const noexcept { return runs ? static_cast<double>(successes) / static_cast<double>(runs) : 0.0; }
};

// Seeded GA runs per mutation probability; a run succeeds when its best
// cost is within `tolerance` (relative) of the oracle optimum.
std::vector<SuccessPoint> run_success_rate(const Settings& settings, double total_depth,
                                           std::span<const double> pm_grid, std::size_t runs_per_point,
                                           double tolerance = 1e-3);

Report success_rate_command(const Settings& settings, double total_depth, std::span<const double> pm_grid,
                            std::size_t runs_per_point);

// from, from+step, ..., to (inclusive within half a step).
std::vector<double> linear_grid(double from, double to, double step);

} // namespace facemill::app
