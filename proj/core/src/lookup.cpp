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

#include "facemill/lookup.hpp"

#include <stdexcept>
#include <string>

#include "facemill/error.hpp"

namespace facemill {

PairTable::PairTable(DepthTicks total_depth, std::vector<PairEntry> entries)
    : total_depth_(total_depth), entries_(std::move(entries)) {}

const PairEntry& PairTable::at(std::size_t index) const {
  if (index < 1 || index > entries_.size()) {
    throw std::out_of_range("pair index " + std::to_string(index) + " outside [1, " +
                            std::to_string(entries_.size()) + "]");
  }
  return entries_[index - 1];
}

std::vector<DepthTicks> depth_grid(const DepthRange& range) {
  const auto lo = DepthTicks::from_mm(range.min);
  const auto hi = DepthTicks::from_mm(range.max);
  const auto step = DepthTicks::from_mm(range.step);
  if (step.count() <= 0) {
    throw InvalidInput("depth step must be positive");
  }
  std::vector<DepthTicks> out;
  for (auto d = lo; d <= hi; d = d + step) {
    out.push_back(d);
  }
  return out;
}

PairTable enumerate_pairs(DepthTicks total_depth, const DepthRange& finish, const DepthRange& rough) {
  if (total_depth.count() <= 0) {
    throw InvalidInput("total depth of cut must be positive");
  }
  const auto rough_grid = depth_grid(rough);
  std::vector<PairEntry> entries;
  for (const auto ds : depth_grid(finish)) {
    const std::int64_t remaining = (total_depth - ds).count();
    if (remaining <= 0) {
      continue;
    }
    for (const auto dr : rough_grid) {
      if (remaining % dr.count() == 0) {
        PairEntry e;
        e.index = entries.size() + 1;
        e.finish_depth = ds;
        e.rough_depth = dr;
        e.rough_passes = static_cast<int>(remaining / dr.count());
        entries.push_back(e);
      }
    }
  }
  if (entries.empty()) {
    throw NoFeasibleAllocation("no (d_s, d_r, n) allocation removes d_t = " + std::to_string(total_depth.mm()) +
                               " mm");
  }
  return PairTable(total_depth, std::move(entries));
}

PairTable enumerate_pairs(double total_depth_mm, const ProblemData& problem) {
  return enumerate_pairs(DepthTicks::from_mm(total_depth_mm), problem.d_s, problem.d_r);
}

const PairEntry& pair_at(const PairTable& table, std::size_t index) { return table.at(index); }

} // namespace facemill
