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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "facemill/ga.hpp"
#include "facemill/model.hpp"

namespace facemill::testing {

struct PropertyOutcome {
  std::string name;
  bool ok = true;
  std::string detail; // first counterexample, or a case count on success
};

// Best individual never gets worse between generations under the
// feasibility-first ranking.
PropertyOutcome elitism_monotone(const Model& model, double total_depth, const GaConfig& base,
                                 std::span<const std::uint64_t> seeds);

// Every decoded speed, feed and index lies inside its bounds.
PropertyOutcome decoded_bounds(const Model& model, std::uint64_t seed, std::size_t cases);

// Feasible always beats infeasible; a unique best is always selected and
// a unique worst never is.
PropertyOutcome feasibility_dominance(std::uint64_t seed, std::size_t cases);

// CV == 0 exactly when every normalized slack is non-negative.
PropertyOutcome violation_matches_slacks(const Model& model, std::uint64_t seed, std::size_t cases);

// At every locus the two children carry the same bits as the two parents.
PropertyOutcome crossover_conserves_bits(std::uint64_t seed, std::size_t cases);

// Two identical optimize invocations render byte-identical outputs.
PropertyOutcome deterministic_outputs(double total_depth, std::uint64_t seed);

// The integer-tick pair enumeration equals a rational-arithmetic
// enumeration for random total depths and grids.
PropertyOutcome lookup_matches_rational(std::uint64_t seed, std::size_t cases);

std::vector<PropertyOutcome> run_property_suite();

} // namespace facemill::testing
