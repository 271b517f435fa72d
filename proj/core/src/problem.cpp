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

#include "facemill/problem.hpp"

#include <cmath>
#include <string>

#include "facemill/depth.hpp"
#include "facemill/error.hpp"

namespace facemill {

const char* to_string(PassKind kind) noexcept {
  return kind == PassKind::finish ? "finish" : "rough";
}

double geometric_rough_travel(const ProblemData& p) {
  const double r = p.D / 2.0;
  const double w = p.B / 2.0;
  if (w > r) {
    throw InvalidInput("width of cut B exceeds cutter diameter D");
  }
  const double approach = r - std::sqrt(r * r - w * w);
  return p.L + approach + p.e_r;
}

double geometric_finish_travel(const ProblemData& p) { return p.L + p.D + p.e_s; }

double rough_travel(const ProblemData& p) {
  return p.L_tr ? *p.L_tr : geometric_rough_travel(p);
}

double finish_travel(const ProblemData& p) {
  return p.L_ts ? *p.L_ts : geometric_finish_travel(p);
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) {
    throw InvalidInput(what);
  }
}

void check_range(const Range& r, const char* name) {
  require(std::isfinite(r.min) && std::isfinite(r.max), std::string(name) + " bounds must be finite");
  require(r.min > 0.0, std::string(name) + "_min must be positive");
  require(r.min <= r.max, std::string(name) + "_min must not exceed " + name + "_max");
}

void check_depth(const DepthRange& r, const char* name) {
  require(r.step > 0.0, std::string(name) + "_step must be positive");
  require(r.min > 0.0, std::string(name) + "_min must be positive");
  require(r.min <= r.max, std::string(name) + "_min must not exceed " + name + "_max");
  // Throws when off the depth quantum.
  (void)DepthTicks::from_mm(r.min);
  (void)DepthTicks::from_mm(r.max);
  (void)DepthTicks::from_mm(r.step);
}

} // namespace

void validate(const ProblemData& p) {
  require(p.L > 0 && p.B > 0 && p.D > 0 && p.r_e > 0, "geometry (L, B, D, r_e) must be positive");
  require(p.Z >= 1, "Z must be at least 1");
  require(p.e_r >= 0 && p.e_s >= 0, "extra travel must be non-negative");
  require(!p.L_tr || *p.L_tr > 0, "L_tr must be positive");
  require(!p.L_ts || *p.L_ts > 0, "L_ts must be positive");
  require(p.eta > 0 && p.eta <= 1, "eta must lie in (0, 1]");
  require(p.k0 >= 0 && p.k_t >= 0 && p.t_e >= 0 && p.t_p >= 0 && p.h1 >= 0 && p.h2 >= 0,
          "economic constants must be non-negative");
  require(p.F_max > 0 && p.P_max > 0, "F_max and P_max must be positive");
  require(p.R_s_max > 0 && p.R_r_max > 0, "R_s_max and R_r_max must be positive");
  require(p.l > 0 && p.C_v > 0 && p.K_v > 0, "tool-life constants C_v, K_v, l must be positive");
  require(p.C_f > 0 && p.K_f > 0, "force constants C_f, K_f must be positive");
  check_range(p.V_s, "V_s");
  check_range(p.V_r, "V_r");
  check_range(p.f_s, "f_s");
  check_range(p.f_r, "f_r");
  check_depth(p.d_s, "d_s");
  check_depth(p.d_r, "d_r");
  (void)rough_travel(p);
}

} // namespace facemill
