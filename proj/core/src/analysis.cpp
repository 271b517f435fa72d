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

#include "facemill/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include "facemill/error.hpp"
#include "facemill/lookup.hpp"
#include "facemill/oracle.hpp"

namespace facemill {

const char* to_string(SolverMode mode) noexcept { return mode == SolverMode::oracle ? "oracle" : "ga"; }

const char* to_string(LimitKind kind) noexcept { return kind == LimitKind::force ? "force" : "power"; }

Optimum solve(const Model& model, double total_depth, const SolverOptions& options) {
  if (options.mode == SolverMode::oracle) {
    const auto row = global_optimum(model, total_depth);
    return {to_plan(row), row.cost};
  }
  const auto result = run(model, total_depth, options.ga);
  if (!result.best.feasible()) {
    throw NoFeasibleAllocation("GA finished without a feasible plan");
  }
  return {result.best.plan, result.best.cost};
}

std::optional<double> least_squares_slope(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = std::min(x.size(), y.size());
  if (n < 2) {
    return std::nullopt;
  }
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) {
    return std::nullopt;
  }
  return sxy / sxx;
}

SensitivitySweep sensitivity_sweep(const Model& base, double total_depth, std::span<const LimitKind> kinds,
                                   std::span<const double> multipliers, const SolverOptions& options) {
  for (double m : multipliers) {
    if (!(m > 0.0)) {
      throw InvalidInput("sensitivity multipliers must be positive");
    }
  }
  SensitivitySweep out;
  for (const auto kind : kinds) {
    std::vector<double> xs;
    std::vector<double> ys;
    for (double m : multipliers) {
      ProblemData scaled = base.problem();
      (kind == LimitKind::force ? scaled.F_max : scaled.P_max) *= m;
      SensitivityPoint pt;
      pt.kind = kind;
      pt.multiplier = m;
      try {
        const Model model(scaled, base.source());
        pt.cost = solve(model, total_depth, options).cost;
        xs.push_back(m);
        ys.push_back(pt.cost);
      } catch (const NoFeasibleAllocation& e) {
        pt.feasible = false;
        pt.cost = std::numeric_limits<double>::quiet_NaN();
        pt.note = e.what();
      }
      out.points.push_back(std::move(pt));
    }
    (kind == LimitKind::force ? out.force_slope : out.power_slope) = least_squares_slope(xs, ys);
  }
  return out;
}

DepthSweep dt_sweep(const Model& model, double from, double to, double step, const SolverOptions& options) {
  const auto lo = DepthTicks::from_mm(from);
  const auto hi = DepthTicks::from_mm(to);
  const auto inc = DepthTicks::from_mm(step);
  if (inc.count() <= 0 || lo.count() <= 0 || hi < lo) {
    throw InvalidInput("sweep needs 0 < from <= to and a positive step");
  }
  DepthSweep out;
  for (auto dt = lo; dt <= hi; dt = dt + inc) {
    try {
      const auto opt = solve(model, dt.mm(), options);
      SweepRow row;
      row.total_depth = dt.mm();
      row.plan = opt.plan;
      row.cost = opt.cost;
      const auto& f = opt.plan.finish;
      const auto& r = opt.plan.rough;
      row.finish_life = model.tool_life(PassKind::finish, f.speed, f.feed, f.depth);
      row.rough_life = model.tool_life(PassKind::rough, r.speed, r.feed, r.depth);
      out.rows.push_back(row);
    } catch (const NoFeasibleAllocation&) {
      out.skipped.push_back(dt.mm());
    }
  }
  return out;
}

namespace {

// Steps x toward zero until ok(x); absorbs last-ulp overshoot of closed-form caps.
template <typename Pred>
double settle_below(double x, Pred ok) {
  for (int i = 0; i < 64 && !ok(x); ++i) {
    x = std::nextafter(x, 0.0);
  }
  return x;
}

std::string fmt_value(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

} // namespace

Estimate estimate_plan(const Model& model, double total_depth, const EstimateSettings& settings) {
  const auto& p = model.problem();
  const auto table = enumerate_pairs(total_depth, p);
  const auto dt = DepthTicks::from_mm(total_depth);
  const auto ds_max = DepthTicks::from_mm(p.d_s.max);
  const auto dr_max = DepthTicks::from_mm(p.d_r.max);

  // fewest rough passes the depth limits allow
  const std::int64_t rest = (dt - ds_max).count();
  int passes = rest <= 0 ? 1 : static_cast<int>((rest + dr_max.count() - 1) / dr_max.count());
  passes = std::max(passes, 1);

  Estimate est;
  est.notes.push_back("n = " + std::to_string(passes) + " from ceil((d_t - d_s_max) / d_r_max)");
  const auto pick = [&](int n) -> const PairEntry* {
    const PairEntry* best = nullptr;
    for (const auto& e : table.entries()) {
      if (e.rough_passes == n && (!best || e.rough_depth < best->rough_depth)) {
        best = &e;
      }
    }
    return best;
  };
  const PairEntry* pair = pick(passes);
  if (!pair && settings.allow_extra_pass) {
    pair = pick(passes + 1);
    if (pair) {
      ++passes;
      est.notes.push_back("no pair with the minimal pass count; fell back to n = " + std::to_string(passes));
    }
  }
  if (!pair) {
    throw EstimationFailure("no lookup-table pair has n = " + std::to_string(passes) + " rough passes at d_t = " +
                            fmt_value(total_depth) + " mm");
  }
  est.notes.push_back("d_s = " + fmt_value(pair->d_s()) + ", d_r = " + fmt_value(pair->d_r()) +
                      " (smallest d_r with that n)");

  Plan& plan = est.plan;
  plan.rough_passes = passes;
  plan.finish.depth = pair->d_s();
  plan.rough.depth = pair->d_r();

  const auto force_ok = [&](double d) {
    return [&model, &p, d](double f) { return model.cutting_force(d, f) <= p.F_max; };
  };
  const auto power_ok = [&](double d, double f) {
    return [&model, &p, d, f](double v) { return model.cutting_power(v, d, f) <= p.P_max; };
  };

  // rough feed at the tightest of f_max, surface cap and force cap
  const double fr_bound = model.feed_upper_bound(PassKind::rough);
  const double fr_force = model.force_feed_cap(plan.rough.depth);
  plan.rough.feed = settle_below(std::min(fr_bound, fr_force), force_ok(plan.rough.depth));
  est.notes.push_back(std::string("f_r set by ") + (fr_force < fr_bound ? "force limit" : "feed/surface bound"));

  plan.finish.feed = std::min({settings.finish_feed, model.feed_upper_bound(PassKind::finish),
                               model.force_feed_cap(plan.finish.depth)});
  plan.finish.feed = settle_below(plan.finish.feed, force_ok(plan.finish.depth));
  if (plan.finish.feed < settings.finish_feed) {
    est.notes.push_back("f_s clamped from " + fmt_value(settings.finish_feed) + " to its cap");
  }

  const auto set_speed = [&](PassSetting& s, PassKind kind, double wanted) {
    const double cap = std::min(p.speed_bounds(kind).max, model.power_speed_cap(s.depth, s.feed));
    s.speed = settle_below(std::min(wanted, cap), power_ok(s.depth, s.feed));
    if (s.speed < wanted) {
      est.notes.push_back(std::string(kind == PassKind::finish ? "V_s" : "V_r") + " clamped from " +
                          fmt_value(wanted) + " to the power limit " + fmt_value(s.speed));
    }
  };
  set_speed(plan.finish, PassKind::finish, settings.finish_speed);
  set_speed(plan.rough, PassKind::rough, settings.rough_speed);

  const auto report = model.constraint_report(plan);
  if (!report.feasible()) {
    throw EstimationFailure("estimated plan violates constraints (CV = " + fmt_value(report.violation) + ")");
  }
  est.cost = model.unit_cost(plan);
  return est;
}

} // namespace facemill
