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

namespace facemill {

enum class PassKind { finish, rough };

const char* to_string(PassKind kind) noexcept;

struct Range {
  double min;
  double max;
};

struct DepthRange {
  double min;
  double max;
  double step;
};

// Coefficients as printed alongside the dataset. Used only for the
// consistency report and for the "printed" coefficient mode.
struct ReferenceCoefficients {
  double C0 = 253337816.7;
  double C1 = 545.0;
  double C2 = 0.111315;
  double n1 = 3.125;
  double n2 = 0.46875;
  double n3 = 1.09375;
  double a_s = 6.330309;
  double a_r = 4.09271;
  double b_s = 1.680135e-6;
  double b_r = 2.598712e-6;
  double c_s = 0.29105;
  double c_r = 0.2411925;
};

// Machine, tool and economic constants of one face-milling job. Defaults
// are the reference case-study dataset.
struct ProblemData {
  // geometry (mm)
  double L = 400.0;
  double B = 100.0;
  double D = 160.0;
  int Z = 16;
  double r_e = 1.0;
  double e_r = 3.0;
  double e_s = 3.0;
  // Travel lengths; when unset they are computed from L, D, B and the
  // extra travel.
  std::optional<double> L_tr = 260.55;
  std::optional<double> L_ts = 403.0;

  // economics
  double k0 = 0.5;   // $/min
  double k_t = 2.5;  // $/edge
  double t_e = 1.5;  // min/edge
  double t_p = 0.75; // min/piece
  double h1 = 7e-4;  // min/mm
  double h2 = 0.3;   // min

  // variable bounds
  Range V_s{50.0, 300.0};
  Range V_r{50.0, 300.0};
  Range f_s{0.1, 0.6};
  Range f_r{0.1, 0.6};
  DepthRange d_s{0.5, 2.0, 0.1};
  DepthRange d_r{1.0, 4.0, 0.1};

  // limits
  double F_max = 815.77; // kgf
  double P_max = 10.0;   // kW
  double R_s_max = 0.0025;
  double R_r_max = 0.025;
  double eta = 0.8;

  // extended Taylor tool-life constants
  double C_v = 445.0;
  double K_v = 1.0;
  double l = 0.32;
  double x_v = 0.15;
  double y_v = 0.35;
  double p_v = 0.0;
  double q_v = 0.2;
  double s_v = 0.2;

  // cutting-force constants
  double C_f = 54.5;
  double K_f = 1.0;
  double s_f = 1.0;
  double p_f = 1.0;
  double q_f = 1.0;
  double n4 = 0.9;
  double n5 = 0.74;

  ReferenceCoefficients reference;

  const Range& speed_bounds(PassKind kind) const noexcept {
    return kind == PassKind::finish ? V_s : V_r;
  }
  const Range& feed_bounds(PassKind kind) const noexcept {
    return kind == PassKind::finish ? f_s : f_r;
  }
  const DepthRange& depth_bounds(PassKind kind) const noexcept {
    return kind == PassKind::finish ? d_s : d_r;
  }
  double roughness_limit(PassKind kind) const noexcept {
    return kind == PassKind::finish ? R_s_max : R_r_max;
  }
};

// Rough-pass travel: L + approach + e_r, approach for symmetric milling.
double geometric_rough_travel(const ProblemData& p);
// Finish-pass travel: L + D + e_s (cutter clears the workpiece).
double geometric_finish_travel(const ProblemData& p);

double rough_travel(const ProblemData& p);
double finish_travel(const ProblemData& p);

// Throws InvalidInput naming the first violated invariant.
void validate(const ProblemData& p);

} // namespace facemill
