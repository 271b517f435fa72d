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

#include <array>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "facemill/problem.hpp"

namespace facemill {

// Which a/b/c coefficients drive the cost model: derived from the process
// constants, or the printed reference values taken verbatim.
enum class CoefficientSource { derived, printed };

const char* to_string(CoefficientSource source) noexcept;

// UC_pass = a/(V f) + b V^(n1-1) d^n2 f^(n3-1) + c
struct PassCoefficients {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

struct CoefficientCheck {
  std::string name;
  double derived = 0.0;
  double reference = 0.0;
  double relative_difference = 0.0;
  // "match", "mismatch" or "swapped"
  std::string status;
};

struct ConsistencyReport {
  std::vector<CoefficientCheck> checks;
  std::vector<std::string> warnings;
};

struct DerivedCoefficients {
  double C0 = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  double n1 = 0.0;
  double n2 = 0.0;
  double n3 = 0.0;
  double n4 = 0.0;
  double n5 = 0.0;
  PassCoefficients finish;
  PassCoefficients rough;
  double preparation_cost = 0.0; // k0 * t_p
  double rough_travel = 0.0;
  double finish_travel = 0.0;
  ConsistencyReport consistency;

  const PassCoefficients& pass(PassKind kind) const noexcept {
    return kind == PassKind::finish ? finish : rough;
  }
};

// Relative tolerance under which a derived value "matches" its reference.
inline constexpr double kCoefficientMatchTolerance = 1e-4;

DerivedCoefficients derive_coefficients(const ProblemData& problem);

struct PassSetting {
  double speed = 0.0; // m/min
  double feed = 0.0;  // mm/tooth
  double depth = 0.0; // mm
};

struct Plan {
  PassSetting finish;
  PassSetting rough;
  int rough_passes = 1;

  const PassSetting& pass(PassKind kind) const noexcept {
    return kind == PassKind::finish ? finish : rough;
  }
  double total_depth() const noexcept { return finish.depth + rough_passes * rough.depth; }
};

struct CostBreakdown {
  double machining = 0.0;
  double idle = 0.0;
  double tool_replacement = 0.0;
  double tool = 0.0;

  double total() const noexcept { return machining + idle + tool_replacement + tool; }
};

enum class Constraint : std::size_t {
  force_finish,
  force_rough,
  power_finish,
  power_rough,
  surface_finish,
  surface_rough,
  speed_finish_min,
  speed_finish_max,
  speed_rough_min,
  speed_rough_max,
  feed_finish_min,
  feed_finish_max,
  feed_rough_min,
  feed_rough_max,
  depth_finish_min,
  depth_finish_max,
  depth_rough_min,
  depth_rough_max,
};

inline constexpr std::size_t kConstraintCount = 18;

std::string_view to_string(Constraint c) noexcept;

// Normalized inequality slacks (g >= 0 is satisfied) and their summed
// violation. The depth-balance equality is reported but not part of CV.
struct ConstraintReport {
  std::array<double, kConstraintCount> slack{};
  double violation = 0.0;
  double depth_residual = 0.0;

  double operator[](Constraint c) const noexcept { return slack[static_cast<std::size_t>(c)]; }
  bool feasible() const noexcept { return violation == 0.0; }
};

// Process physics and economics for one problem. Immutable after
// construction; all members are safe to call concurrently.
class Model {
public:
  explicit Model(ProblemData problem, CoefficientSource source = CoefficientSource::derived);

  const ProblemData& problem() const noexcept { return problem_; }
  const DerivedCoefficients& coefficients() const noexcept { return coeffs_; }
  CoefficientSource source() const noexcept { return source_; }

  // T = C0 / (V^n1 d^n2 f^n3), minutes.
  double tool_life(PassKind kind, double speed, double feed, double depth) const;
  // F = C1 d^n4 f^n5, kgf.
  double cutting_force(double depth, double feed) const;
  // P = C2 V d^n4 f^n5, kW.
  double cutting_power(double speed, double depth, double feed) const;

  // sqrt(R_max r_e / 0.0321): largest feed meeting the roughness limit.
  double surface_feed_cap(PassKind kind) const noexcept;
  // min(f_max, surface cap).
  double feed_upper_bound(PassKind kind) const noexcept;
  // Feed at which the cutting force reaches F_max for this depth.
  double force_feed_cap(double depth) const;
  // Speed at which power reaches P_max for this depth and feed.
  double power_speed_cap(double depth, double feed) const;

  double pass_cost(PassKind kind, double speed, double feed, double depth) const;
  double unit_cost(const Plan& plan) const;
  CostBreakdown cost_breakdown(const Plan& plan) const;

  ConstraintReport constraint_report(const Plan& plan) const;
  ConstraintReport constraint_report(const Plan& plan, double total_depth) const;

private:
  ProblemData problem_;
  CoefficientSource source_;
  DerivedCoefficients coeffs_;
};

// Roughness model Ra = 0.0321 f^2 / r_e.
inline constexpr double kRoughnessFactor = 0.0321;
// kgf m/min -> kW divisor (before efficiency).
inline constexpr double kPowerDivisor = 6120.0;

} // namespace facemill
