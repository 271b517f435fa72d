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

#include "facemill/model.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <string>
#include <utility>

#include "facemill/error.hpp"

namespace facemill {

const char* to_string(CoefficientSource source) noexcept {
  return source == CoefficientSource::derived ? "derived" : "printed";
}

std::string_view to_string(Constraint c) noexcept {
  switch (c) {
    case Constraint::force_finish: return "force_finish";
    case Constraint::force_rough: return "force_rough";
    case Constraint::power_finish: return "power_finish";
    case Constraint::power_rough: return "power_rough";
    case Constraint::surface_finish: return "surface_finish";
    case Constraint::surface_rough: return "surface_rough";
    case Constraint::speed_finish_min: return "speed_finish_min";
    case Constraint::speed_finish_max: return "speed_finish_max";
    case Constraint::speed_rough_min: return "speed_rough_min";
    case Constraint::speed_rough_max: return "speed_rough_max";
    case Constraint::feed_finish_min: return "feed_finish_min";
    case Constraint::feed_finish_max: return "feed_finish_max";
    case Constraint::feed_rough_min: return "feed_rough_min";
    case Constraint::feed_rough_max: return "feed_rough_max";
    case Constraint::depth_finish_min: return "depth_finish_min";
    case Constraint::depth_finish_max: return "depth_finish_max";
    case Constraint::depth_rough_min: return "depth_rough_min";
    case Constraint::depth_rough_max: return "depth_rough_max";
  }
  return "unknown";
}

namespace {

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.7g", v);
  return buf;
}

double rel_diff(double derived, double reference) {
  const double scale = std::abs(reference) > 0.0 ? std::abs(reference) : 1.0;
  return std::abs(derived - reference) / scale;
}

bool close(double a, double b) { return rel_diff(a, b) <= kCoefficientMatchTolerance; }

void check_single(ConsistencyReport& report, std::string name, double derived, double reference) {
  const bool ok = close(derived, reference);
  if (!ok) {
    report.warnings.push_back(name + ": derived " + num(derived) + " differs from reference " +
                              num(reference));
  }
  report.checks.push_back({std::move(name), derived, reference, rel_diff(derived, reference), ok ? "match" : "mismatch"});
}

// A finish/rough pair whose reference labels are exchanged produces one
// "swapped" warning rather than two independent mismatches.
void check_pair(ConsistencyReport& report, const std::string& stem, double derived_s, double derived_r,
                double reference_s, double reference_r) {
  const bool straight = close(derived_s, reference_s) && close(derived_r, reference_r);
  const bool crossed = close(derived_s, reference_r) && close(derived_r, reference_s);
  if (!straight && crossed) {
    report.checks.push_back({stem + "_s", derived_s, reference_s, rel_diff(derived_s, reference_s), "swapped"});
    report.checks.push_back({stem + "_r", derived_r, reference_r, rel_diff(derived_r, reference_r), "swapped"});
    report.warnings.push_back(stem + "_s/" + stem + "_r swapped: derived finish value " + num(derived_s) +
                              " matches reference " + stem + "_r and derived rough value " +
                              num(derived_r) + " matches reference " + stem + "_s");
    return;
  }
  check_single(report, stem + "_s", derived_s, reference_s);
  check_single(report, stem + "_r", derived_r, reference_r);
}

void require_positive(double v, const char* what) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidInput(std::string(what) + " must be positive and finite");
  }
}

} // namespace

DerivedCoefficients derive_coefficients(const ProblemData& p) {
  validate(p);
  DerivedCoefficients d;
  const double Z = static_cast<double>(p.Z);
  d.n1 = 1.0 / p.l;
  d.n2 = p.x_v / p.l;
  d.n3 = p.y_v / p.l;
  d.n4 = p.n4;
  d.n5 = p.n5;
  d.C0 = std::pow(p.C_v * p.K_v * std::pow(p.D, p.q_v) / (std::pow(p.B, p.s_v) * std::pow(Z, p.p_v)), 1.0 / p.l);
  d.C1 = p.C_f * p.K_f * std::pow(p.B, p.s_f) * std::pow(Z, p.p_f) / std::pow(p.D, p.q_f);
  d.C2 = d.C1 / (kPowerDivisor * p.eta);

  d.rough_travel = rough_travel(p);
  d.finish_travel = finish_travel(p);
  const double pi = std::numbers::pi;
  const auto pass = [&](double travel) {
    PassCoefficients c;
    // machining time per unit 1/(V f): pi D L / (1000 Z)
    c.a = p.k0 * pi * p.D * travel / (1000.0 * Z);
    // Z edges per tool change, each t_m / T of a life
    c.b = (p.k0 * p.t_e + p.k_t) * pi * p.D * travel / (1000.0 * d.C0);
    c.c = p.k0 * (p.h1 * travel + p.h2);
    return c;
  };
  d.finish = pass(d.finish_travel);
  d.rough = pass(d.rough_travel);
  d.preparation_cost = p.k0 * p.t_p;

  const auto& ref = p.reference;
  auto& report = d.consistency;
  check_single(report, "C0", d.C0, ref.C0);
  check_single(report, "C1", d.C1, ref.C1);
  check_single(report, "C2", d.C2, ref.C2);
  check_single(report, "n1", d.n1, ref.n1);
  check_single(report, "n2", d.n2, ref.n2);
  check_single(report, "n3", d.n3, ref.n3);
  check_pair(report, "a", d.finish.a, d.rough.a, ref.a_s, ref.a_r);
  check_pair(report, "b", d.finish.b, d.rough.b, ref.b_s, ref.b_r);
  check_pair(report, "c", d.finish.c, d.rough.c, ref.c_s, ref.c_r);
  return d;
}

Model::Model(ProblemData problem, CoefficientSource source)
    : problem_(std::move(problem)), source_(source), coeffs_(derive_coefficients(problem_)) {
  if (source_ == CoefficientSource::printed) {
    const auto& ref = problem_.reference;
    coeffs_.C0 = ref.C0;
    coeffs_.C1 = ref.C1;
    coeffs_.C2 = ref.C2;
    coeffs_.n1 = ref.n1;
    coeffs_.n2 = ref.n2;
    coeffs_.n3 = ref.n3;
    coeffs_.finish = {ref.a_s, ref.b_s, ref.c_s};
    coeffs_.rough = {ref.a_r, ref.b_r, ref.c_r};
  }
}

double Model::tool_life(PassKind /*kind*/, double speed, double feed, double depth) const {
  require_positive(speed, "cutting speed");
  require_positive(feed, "feed");
  require_positive(depth, "depth of cut");
  const auto& c = coeffs_;
  return c.C0 / (std::pow(speed, c.n1) * std::pow(depth, c.n2) * std::pow(feed, c.n3));
}

double Model::cutting_force(double depth, double feed) const {
  require_positive(feed, "feed");
  require_positive(depth, "depth of cut");
  return coeffs_.C1 * std::pow(depth, coeffs_.n4) * std::pow(feed, coeffs_.n5);
}

double Model::cutting_power(double speed, double depth, double feed) const {
  require_positive(speed, "cutting speed");
  require_positive(feed, "feed");
  require_positive(depth, "depth of cut");
  return coeffs_.C2 * speed * std::pow(depth, coeffs_.n4) * std::pow(feed, coeffs_.n5);
}

double Model::surface_feed_cap(PassKind kind) const noexcept {
  return std::sqrt(problem_.roughness_limit(kind) * problem_.r_e / kRoughnessFactor);
}

double Model::feed_upper_bound(PassKind kind) const noexcept {
  return std::min(problem_.feed_bounds(kind).max, surface_feed_cap(kind));
}

double Model::force_feed_cap(double depth) const {
  require_positive(depth, "depth of cut");
  return std::pow(problem_.F_max / (coeffs_.C1 * std::pow(depth, coeffs_.n4)), 1.0 / coeffs_.n5);
}

double Model::power_speed_cap(double depth, double feed) const {
  require_positive(depth, "depth of cut");
  require_positive(feed, "feed");
  return problem_.P_max / (coeffs_.C2 * std::pow(depth, coeffs_.n4) * std::pow(feed, coeffs_.n5));
}

double Model::pass_cost(PassKind kind, double speed, double feed, double depth) const {
  require_positive(speed, "cutting speed");
  require_positive(feed, "feed");
  require_positive(depth, "depth of cut");
  const auto& k = coeffs_.pass(kind);
  const auto& c = coeffs_;
  return k.a / (speed * feed) +
         k.b * std::pow(speed, c.n1 - 1.0) * std::pow(depth, c.n2) * std::pow(feed, c.n3 - 1.0) + k.c;
}

double Model::unit_cost(const Plan& plan) const {
  if (plan.rough_passes < 1) {
    throw InvalidInput("number of rough passes must be at least 1");
  }
  const auto& f = plan.finish;
  const auto& r = plan.rough;
  return pass_cost(PassKind::finish, f.speed, f.feed, f.depth) +
         plan.rough_passes * pass_cost(PassKind::rough, r.speed, r.feed, r.depth) + coeffs_.preparation_cost;
}

CostBreakdown Model::cost_breakdown(const Plan& plan) const {
  if (plan.rough_passes < 1) {
    throw InvalidInput("number of rough passes must be at least 1");
  }
  const auto& p = problem_;
  const double n = plan.rough_passes;
  const double Z = static_cast<double>(p.Z);
  const double pi = std::numbers::pi;
  const auto machining_time = [&](const PassSetting& s, double travel) {
    return pi * p.D * travel / (1000.0 * s.speed * s.feed * Z);
  };
  const double t_ms = machining_time(plan.finish, coeffs_.finish_travel);
  const double t_mr = machining_time(plan.rough, coeffs_.rough_travel);
  const double T_s = tool_life(PassKind::finish, plan.finish.speed, plan.finish.feed, plan.finish.depth);
  const double T_r = tool_life(PassKind::rough, plan.rough.speed, plan.rough.feed, plan.rough.depth);
  const double wear = Z * (t_ms / T_s + n * t_mr / T_r);

  CostBreakdown out;
  out.machining = p.k0 * (t_ms + n * t_mr);
  out.idle = p.k0 * (p.t_p + n * (p.h1 * coeffs_.rough_travel + p.h2) + (p.h1 * coeffs_.finish_travel + p.h2));
  out.tool_replacement = p.k0 * p.t_e * wear;
  out.tool = p.k_t * wear;
  return out;
}

ConstraintReport Model::constraint_report(const Plan& plan) const {
  ConstraintReport r;
  const auto& p = problem_;
  const auto set = [&](Constraint c, double g) { r.slack[static_cast<std::size_t>(c)] = g; };
  const auto upper = [](double value, double limit) { return 1.0 - value / limit; };
  const auto lower = [](double value, double limit) { return value / limit - 1.0; };
  const auto& c = coeffs_;
  const auto force = [&](const PassSetting& s) {
    return c.C1 * std::pow(s.depth, c.n4) * std::pow(s.feed, c.n5);
  };
  const auto power = [&](const PassSetting& s) {
    return c.C2 * s.speed * std::pow(s.depth, c.n4) * std::pow(s.feed, c.n5);
  };

  const auto& fs = plan.finish;
  const auto& rs = plan.rough;
  set(Constraint::force_finish, upper(force(fs), p.F_max));
  set(Constraint::force_rough, upper(force(rs), p.F_max));
  set(Constraint::power_finish, upper(power(fs), p.P_max));
  set(Constraint::power_rough, upper(power(rs), p.P_max));
  set(Constraint::surface_finish, upper(fs.feed, surface_feed_cap(PassKind::finish)));
  set(Constraint::surface_rough, upper(rs.feed, surface_feed_cap(PassKind::rough)));
  set(Constraint::speed_finish_min, lower(fs.speed, p.V_s.min));
  set(Constraint::speed_finish_max, upper(fs.speed, p.V_s.max));
  set(Constraint::speed_rough_min, lower(rs.speed, p.V_r.min));
  set(Constraint::speed_rough_max, upper(rs.speed, p.V_r.max));
  set(Constraint::feed_finish_min, lower(fs.feed, p.f_s.min));
  set(Constraint::feed_finish_max, upper(fs.feed, p.f_s.max));
  set(Constraint::feed_rough_min, lower(rs.feed, p.f_r.min));
  set(Constraint::feed_rough_max, upper(rs.feed, p.f_r.max));
  set(Constraint::depth_finish_min, lower(fs.depth, p.d_s.min));
  set(Constraint::depth_finish_max, upper(fs.depth, p.d_s.max));
  set(Constraint::depth_rough_min, lower(rs.depth, p.d_r.min));
  set(Constraint::depth_rough_max, upper(rs.depth, p.d_r.max));

  double cv = 0.0;
  for (double g : r.slack) {
    if (g < 0.0) {
      cv += -g;
    }
  }
  r.violation = cv;
  return r;
}

ConstraintReport Model::constraint_report(const Plan& plan, double total_depth) const {
  auto r = constraint_report(plan);
  r.depth_residual = plan.total_depth() - total_depth;
  return r;
}

} // namespace facemill
