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

#include "facemill/depth.hpp"
#include "facemill/problem.hpp"

namespace facemill {

// One way to remove the total depth: a finish pass of d_s and n rough
// passes of d_r.
struct PairEntry {
  std::size_t index = 0; // 1-based position in the table
  DepthTicks finish_depth;
  DepthTicks rough_depth;
  int rough_passes = 0;

  double d_s() const noexcept { return finish_depth.mm(); }
  double d_r() const noexcept { return rough_depth.mm(); }
};

// All grid allocations for one total depth, sorted by (d_s, d_r).
class PairTable {
public:
  PairTable(DepthTicks total_depth, std::vector<PairEntry> entries);

  DepthTicks total_depth() const noexcept { return total_depth_; }
  double d_t() const noexcept { return total_depth_.mm(); }
  std::size_t size() const noexcept { return entries_.size(); }
  std::span<const PairEntry> entries() const noexcept { return entries_; }

  // 1-based; throws std::out_of_range.
  const PairEntry& at(std::size_t index) const;

private:
  DepthTicks total_depth_;
  std::vector<PairEntry> entries_;
};

// Every grid point of a depth range, in ascending order.
std::vector<DepthTicks> depth_grid(const DepthRange& range);

// Pairs (d_s, d_r) on their grids for which (d_t - d_s) / d_r is a positive
// integer. Throws NoFeasibleAllocation when there are none.
PairTable enumerate_pairs(double total_depth_mm, const ProblemData& problem);
PairTable enumerate_pairs(DepthTicks total_depth, const DepthRange& finish, const DepthRange& rough);

const PairEntry& pair_at(const PairTable& table, std::size_t index);

} // namespace facemill
