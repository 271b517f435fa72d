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

#include "facemill/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <optional>

#include "facemill/error.hpp"

namespace facemill {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct PassBox {
  double f_lo;
  double f_hi;
  double v_lo;
  double v_hi;
};

// Feed range over which some bounded speed meets every limit.
PassBox feasible_box(const Model& model, PassKind kind, double depth) {
  const auto& p = model.problem();
  const auto& vb = p.speed_bounds(kind);
  const double f_lo = p.feed_bounds(kind).min;
  const double f_surface = model.feed_upper_bound(kind);
  const double f_force = model.force_feed_cap(depth);
  // feed at which even the slowest speed hits P_max
  const double f_power = std::pow(p.P_max / (model.coefficients().C2 * vb.min * std::pow(depth, p.n4)), 1.0 / p.n5);
  const double f_hi = std::min({f_surface, f_force, f_power});
  if (f_hi < f_lo) {
    std::string binding = "force";
    if (f_surface <= f_force && f_surface <= f_power) {
      binding = "surface";
    } else if (f_power < f_force) {
      binding = "power";
    }
    throw InfeasiblePass(binding, std::string(to_string(kind)) + " pass at d = " + std::to_string(depth) +
                                      " mm is infeasible: " + binding + " limit excludes f_min");
  }
  return {f_lo, f_hi, vb.min, vb.max};
}

// Stationary point of A f^p + B f^q, if one exists.
std::optional<double> two_term_stationary(double A, double p, double B, double q) {
  if (p == q || A == 0.0 || B == 0.0) {
    return std::nullopt;
  }
  const double rhs = -B * q / (A * p);
  if (!(rhs > 0.0) || !std::isfinite(rhs)) {
    return std::nullopt;
  }
  return std::pow(rhs, 1.0 / (p - q));
}

PassOptimum by_candidates(const Model& model, PassKind kind, double depth) {
  const auto box = feasible_box(model, kind, depth);
  const auto& c = model.coefficients();
  const auto& k = c.pass(kind);
  const auto& p = model.problem();
  const double d_n2 = std::pow(depth, c.n2);
  // Vp(f) = K f^-n5
  const double K = p.P_max / (c.C2 * std::pow(depth, c.n4));
  const bool has_wear = k.b > 0.0 && c.n1 > 1.0;
  // V*(f) = (M f^-n3)^(1/n1), the unconstrained minimizer in V
  const double M = has_wear ? k.a / ((c.n1 - 1.0) * k.b * d_n2) : kInf;

  const auto best_speed = [&](double f) {
    const double v_hi = std::min(box.v_hi, K * std::pow(f, -c.n5));
    const double v_star = has_wear ? std::pow(M * std::pow(f, -c.n3), 1.0 / c.n1) : kInf;
    return std::clamp(v_star, box.v_lo, v_hi);
  };

  std::vector<double> feeds{box.f_lo, box.f_hi};
  const auto add = [&](std::optional<double> f) {
    if (f && std::isfinite(*f)) {
      feeds.push_back(*f);
    }
  };
  // speed pinned at a bound: (a/V0) f^-1 + b V0^(n1-1) d^n2 f^(n3-1)
  for (double v0 : {box.v_lo, box.v_hi}) {
    add(two_term_stationary(k.a / v0, -1.0, k.b * std::pow(v0, c.n1 - 1.0) * d_n2, c.n3 - 1.0));
  }
  // speed on the power limit
  add(two_term_stationary(k.a / K, c.n5 - 1.0, k.b * std::pow(K, c.n1 - 1.0) * d_n2,
                          c.n3 - 1.0 - c.n5 * (c.n1 - 1.0)));
  // breakpoints between the pieces of V(f)
  if (has_wear) {
    for (double v0 : {box.v_lo, box.v_hi}) {
      add(std::pow(M / std::pow(v0, c.n1), 1.0 / c.n3));
    }
    const double e = c.n5 - c.n3 / c.n1;
    if (e != 0.0) {
      add(std::pow(K / std::pow(M, 1.0 / c.n1), 1.0 / e));
    }
  }
  add(std::pow(K / box.v_hi, 1.0 / c.n5));

  PassOptimum best{0.0, 0.0, kInf};
  for (double f : feeds) {
    if (!(f >= box.f_lo && f <= box.f_hi)) {
      continue;
    }
    const double v = best_speed(f);
    const double cost = model.pass_cost(kind, v, f, depth);
    if (cost < best.cost) {
      best = {v, f, cost};
    }
  }
  return best;
}

bool within_limits(const Model& model, double v, double f, double depth) {
  const auto& p = model.problem();
  return model.cutting_force(depth, f) <= p.F_max && model.cutting_power(v, depth, f) <= p.P_max;
}

// Largest x in [lo, hi] with ok(x), for ok monotone true-then-false.
template <typename Pred>
double bisect_last(double lo, double hi, Pred ok) {
  if (ok(hi)) {
    return hi;
  }
  for (int i = 0; i < 200 && hi - lo > 1e-15 * hi; ++i) {
    const double mid = 0.5 * (lo + hi);
    (ok(mid) ? lo : hi) = mid;
  }
  return lo;
}

template <typename F>
std::pair<double, double> golden_min(double lo, double hi, F fn) {
  constexpr double r = 0.6180339887498949;
  double x1 = hi - r * (hi - lo);
  double x2 = lo + r * (hi - lo);
  double f1 = fn(x1);
  double f2 = fn(x2);
  for (int i = 0; i < 200 && hi - lo > 1e-13 * std::max(1.0, std::abs(hi)); ++i) {
    if (f1 <= f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - r * (hi - lo);
      f1 = fn(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + r * (hi - lo);
      f2 = fn(x2);
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, fn(x)};
}

PassOptimum by_grid(const Model& model, PassKind kind, double depth) {
  constexpr int kSteps = 2000;
  const auto& p = model.problem();
  const auto& vb = p.speed_bounds(kind);
  const double f_lo = p.feed_bounds(kind).min;
  const double f_top = model.feed_upper_bound(kind);

  // Feeds admitting some speed: force met and power met at V_min.
  const auto feed_ok = [&](double f) { return within_limits(model, vb.min, f, depth); };
  if (!feed_ok(f_lo)) {
    throw InfeasiblePass("force", std::string(to_string(kind)) + " pass at d = " + std::to_string(depth) +
                                      " mm is infeasible at f_min");
  }
  const double f_hi = bisect_last(f_lo, f_top, feed_ok);

  const auto top_speed = [&](double f) {
    return bisect_last(vb.min, vb.max, [&](double v) { return within_limits(model, v, f, depth); });
  };

  int best_i = 0;
  double best_cost = kInf;
  for (int i = 0; i <= kSteps; ++i) {
    const double f = f_lo + (f_hi - f_lo) * i / kSteps;
    const double v_hi = top_speed(f);
    // the row's own boundary point keeps the profile over f smooth when
    // the optimum lies on the power curve between grid speeds
    double row_best = model.pass_cost(kind, v_hi, f, depth);
    for (int j = 0; j <= kSteps; ++j) {
      const double v = vb.min + (vb.max - vb.min) * j / kSteps;
      if (v > v_hi) {
        break;
      }
      row_best = std::min(row_best, model.pass_cost(kind, v, f, depth));
    }
    if (row_best < best_cost) {
      best_cost = row_best;
      best_i = i;
    }
  }

  const auto speed_for = [&](double f) {
    return golden_min(vb.min, top_speed(f), [&](double v) { return model.pass_cost(kind, v, f, depth); });
  };
  const double df = (f_hi - f_lo) / kSteps;
  const double lo = std::max(f_lo, f_lo + (best_i - 1) * df);
  const double hi = std::min(f_hi, f_lo + (best_i + 1) * df);
  const auto [f, cost] = golden_min(lo, hi, [&](double x) { return speed_for(x).second; });
  // golden section never probes the bracket ends; the optimum often sits on one
  PassOptimum best{speed_for(f).first, f, cost};
  for (double edge : {lo, hi}) {
    const auto [v, c] = speed_for(edge);
    if (c < best.cost) {
      best = {v, edge, c};
    }
  }
  return best;
}

} // namespace

PassOptimum optimize_pass(const Model& model, PassKind kind, double depth, PassMethod method) {
  if (!(depth > 0.0)) {
    throw InvalidInput("depth of cut must be positive");
  }
  return method == PassMethod::candidates ? by_candidates(model, kind, depth) : by_grid(model, kind, depth);
}

std::vector<OracleRow> enumerate_local_optima(const Model& model, const PairTable& table, PassMethod method) {
  struct Cached {
    std::optional<PassOptimum> optimum;
    std::string failure;
  };
  std::map<std::pair<int, std::int64_t>, Cached> cache;
  const auto solve = [&](PassKind kind, DepthTicks depth) -> const Cached& {
    const auto key = std::make_pair(static_cast<int>(kind), depth.count());
    auto it = cache.find(key);
    if (it == cache.end()) {
      Cached c;
      try {
        c.optimum = optimize_pass(model, kind, depth.mm(), method);
      } catch (const InfeasiblePass& e) {
        c.failure = std::string(to_string(kind)) + ":" + e.binding_constraint();
      }
      it = cache.emplace(key, std::move(c)).first;
    }
    return it->second;
  };

  std::vector<OracleRow> rows;
  rows.reserve(table.size());
  for (const auto& pair : table.entries()) {
    OracleRow row;
    row.pair = pair;
    const auto& fin = solve(PassKind::finish, pair.finish_depth);
    const auto& rgh = solve(PassKind::rough, pair.rough_depth);
    if (fin.optimum && rgh.optimum) {
      row.finish = *fin.optimum;
      row.rough = *rgh.optimum;
      row.cost = row.finish.cost + pair.rough_passes * row.rough.cost + model.coefficients().preparation_cost;
    } else {
      row.feasible = false;
      row.cost = kInf;
      row.infeasibility = fin.optimum ? rgh.failure : fin.failure;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

const OracleRow& global_optimum(std::span<const OracleRow> rows) {
  const OracleRow* best = nullptr;
  for (const auto& row : rows) {
    if (row.feasible && (!best || row.cost < best->cost)) {
      best = &row;
    }
  }
  if (!best) {
    throw NoFeasibleAllocation("no lookup-table pair admits feasible finish and rough passes");
  }
  return *best;
}

OracleRow global_optimum(const Model& model, double total_depth) {
  const auto rows = enumerate_local_optima(model, enumerate_pairs(total_depth, model.problem()));
  return global_optimum(rows);
}

Plan to_plan(const OracleRow& row) {
  Plan plan;
  plan.finish = {row.finish.speed, row.finish.feed, row.pair.d_s()};
  plan.rough = {row.rough.speed, row.rough.feed, row.pair.d_r()};
  plan.rough_passes = row.pair.rough_passes;
  return plan;
}

} // namespace facemill
