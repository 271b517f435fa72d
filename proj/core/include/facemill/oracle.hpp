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

#include <span>
#include <string>
#include <vector>

#include "facemill/lookup.hpp"
#include "facemill/model.hpp"

namespace facemill {

struct PassOptimum {
  double speed = 0.0;
  double feed = 0.0;
  double cost = 0.0;
};

enum class PassMethod {
  // closed-form interior/boundary candidates
  candidates,
  // 2000 x 2000 scan, then nested golden-section refinement
  grid,
};

// Minimizes the pass cost over (V, f) for a fixed depth under the bound,
// force, power and surface-finish constraints. Throws InfeasiblePass.
PassOptimum optimize_pass(const Model& model, PassKind kind, double depth,
                          PassMethod method = PassMethod::candidates);

struct OracleRow {
  PairEntry pair;
  PassOptimum finish;
  PassOptimum rough;
  double cost = 0.0; // UC_s + n UC_r + k0 t_p; +inf when infeasible
  bool feasible = true;
  std::string infeasibility; // binding constraint when !feasible
};

// One row per table entry, in table order. Passes are optimized once per
// distinct depth.
std::vector<OracleRow> enumerate_local_optima(const Model& model, const PairTable& table,
                                              PassMethod method = PassMethod::candidates);

// Lowest-cost feasible row, ties to the smaller index. Throws
// NoFeasibleAllocation when no row is feasible.
const OracleRow& global_optimum(std::span<const OracleRow> rows);

OracleRow global_optimum(const Model& model, double total_depth);

Plan to_plan(const OracleRow& row);

} // namespace facemill
