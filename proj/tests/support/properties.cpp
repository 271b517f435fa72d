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

#include "properties.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <tuple>

#include <fmt/format.h>

#include "facemill/app/commands.hpp"
#include "facemill/error.hpp"
#include "facemill/lookup.hpp"
#include "facemill/random.hpp"
#include "rational.hpp"

namespace facemill::testing {
namespace {

PropertyOutcome fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

PropertyOutcome pass(std::string name, std::size_t cases) {
  return {std::move(name), true, fmt::format("{} cases", cases)};
}

double between(Rng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

Genome random_genome(Rng& rng, std::size_t len) {
  Genome g(len);
  for (auto& b : g) {
    b = static_cast<std::uint8_t>(rng.below(2));
  }
  return g;
}

} // namespace

PropertyOutcome elitism_monotone(const Model& model, double total_depth, const GaConfig& base,
                                 std::span<const std::uint64_t> seeds) {
  const std::string name = "elitism keeps the best individual";
  const auto table = enumerate_pairs(total_depth, model.problem());
  std::size_t checked = 0;
  for (auto seed : seeds) {
    GaConfig cfg = base;
    cfg.seed = seed;
    const auto result = GaEngine(model, table, cfg).run();
    for (std::size_t g = 1; g < result.history.size(); ++g) {
      const auto& prev = result.history[g - 1];
      const auto& cur = result.history[g];
      const bool worse = prev.best_violation == 0.0
                             ? (cur.best_violation != 0.0 || cur.best_cost > prev.best_cost)
                             : cur.best_violation > prev.best_violation;
      if (worse) {
        return fail(name, fmt::format("seed {} generation {}: best ({:g}, CV {:g}) after ({:g}, CV {:g})", seed, g,
                                      cur.best_cost, cur.best_violation, prev.best_cost, prev.best_violation));
      }
      ++checked;
    }
  }
  return pass(name, checked);
}

PropertyOutcome decoded_bounds(const Model& model, std::uint64_t seed, std::size_t cases) {
  const std::string name = "decoded variables respect their bounds";
  Rng rng(seed);
  const auto& p = model.problem();
  for (std::size_t i = 0; i < cases; ++i) {
    const double dt = static_cast<double>(300 + rng.below(1400)) / 100.0;
    std::optional<PairTable> table;
    try {
      table = enumerate_pairs(dt, p);
    } catch (const NoFeasibleAllocation&) {
      continue;
    }
    GaConfig cfg;
    cfg.bits_per_real = 1 + static_cast<unsigned>(rng.below(20));
    const auto layout = make_layout(cfg, table->size());
    Genome g = random_genome(rng, layout.length());
    // force the extremes now and then
    if (i % 7 == 0) {
      std::fill(g.begin(), g.end(), static_cast<std::uint8_t>(i % 2));
    }
    const Plan plan = decode_genome(g, layout, *table, model);
    const bool ok = plan.finish.speed >= p.V_s.min && plan.finish.speed <= p.V_s.max &&
                    plan.rough.speed >= p.V_r.min && plan.rough.speed <= p.V_r.max &&
                    plan.finish.feed >= p.f_s.min &&
                    plan.finish.feed <= model.feed_upper_bound(PassKind::finish) &&
                    plan.rough.feed >= p.f_r.min && plan.rough.feed <= model.feed_upper_bound(PassKind::rough);
    const auto index = decode_index(layout.block(g, 4), table->size());
    if (!ok || index < 1 || index > table->size()) {
      return fail(name, fmt::format("d_t {:g}, {} bits: V_s {:g} f_s {:g} V_r {:g} f_r {:g} index {}", dt,
                                    cfg.bits_per_real, plan.finish.speed, plan.finish.feed, plan.rough.speed,
                                    plan.rough.feed, index));
    }
  }
  return pass(name, cases);
}

PropertyOutcome feasibility_dominance(std::uint64_t seed, std::size_t cases) {
  const std::string name = "feasible solutions dominate in tournaments";
  Rng rng(seed);
  const auto make = [&](bool feasible) {
    Individual ind;
    ind.cost = between(rng, 0.5, 5.0);
    ind.violation = feasible ? 0.0 : between(rng, 1e-9, 3.0);
    return ind;
  };
  for (std::size_t i = 0; i < cases; ++i) {
    const Individual good = make(true);
    const Individual bad = make(false);
    // infeasible ones may be much cheaper
    Individual cheap_bad = bad;
    cheap_bad.cost = good.cost * 0.1;
    if (!wins_tournament(good, cheap_bad) || wins_tournament(cheap_bad, good) ||
        !wins_tournament(good, bad) || wins_tournament(bad, good)) {
      return fail(name, fmt::format("feasible cost {:g} lost to CV {:g}", good.cost, bad.violation));
    }
  }

  // Whole-population check with unique best and worst.
  for (std::size_t trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 * (2 + rng.below(40));
    Population pop;
    for (std::size_t k = 0; k < n; ++k) {
      Individual ind = make(rng.below(2) == 0);
      ind.genome = Genome{static_cast<std::uint8_t>(k)};
      pop.push_back(std::move(ind));
    }
    pop[0].violation = 0.0;
    pop[0].cost = 0.1; // unique best
    pop[1].violation = 10.0; // unique worst
    Rng sel_rng(seed + trial);
    const auto selected = tournament_select(pop, sel_rng);
    const auto count = [&](std::uint8_t tag) {
      return std::count_if(selected.begin(), selected.end(), [&](const Individual& s) { return s.genome[0] == tag; });
    };
    if (selected.size() != n || count(0) < 2 || count(1) != 0) {
      return fail(name, fmt::format("N = {}: best selected {} times, worst {} times", n, count(0), count(1)));
    }
  }
  return pass(name, cases + 50);
}

PropertyOutcome violation_matches_slacks(const Model& model, std::uint64_t seed, std::size_t cases) {
  const std::string name = "CV is zero exactly when all slacks are non-negative";
  Rng rng(seed);
  const auto& p = model.problem();
  std::size_t feasible = 0;
  for (std::size_t i = 0; i < cases; ++i) {
    // half the cases stay near the feasible corner
    const bool tight = i % 2 == 0;
    Plan plan;
    plan.finish.speed = tight ? between(rng, p.V_s.min, p.V_s.max) : between(rng, 0.5 * p.V_s.min, 1.5 * p.V_s.max);
    plan.rough.speed = tight ? between(rng, p.V_r.min, 0.5 * (p.V_r.min + p.V_r.max))
                             : between(rng, 0.5 * p.V_r.min, 1.5 * p.V_r.max);
    plan.finish.feed = tight ? between(rng, p.f_s.min, model.feed_upper_bound(PassKind::finish))
                             : between(rng, 0.5 * p.f_s.min, 1.5 * p.f_s.max);
    plan.rough.feed = tight ? between(rng, p.f_r.min, 0.3) : between(rng, 0.5 * p.f_r.min, 1.5 * p.f_r.max);
    plan.finish.depth = between(rng, 0.3, 2.5);
    plan.rough.depth = tight ? between(rng, p.d_r.min, 3.0) : between(rng, 0.5, 5.0);
    plan.rough_passes = 1 + static_cast<int>(rng.below(5));
    const auto report = model.constraint_report(plan);
    const bool all_ok = std::all_of(report.slack.begin(), report.slack.end(), [](double s) { return s >= 0.0; });
    if (report.feasible() != all_ok) {
      return fail(name, fmt::format("case {}: CV {:g} but slacks all non-negative = {}", i, report.violation, all_ok));
    }
    feasible += all_ok;
  }
  if (feasible == 0 || feasible == cases) {
    return fail(name, fmt::format("sampler produced {} feasible of {}; both classes needed", feasible, cases));
  }
  return pass(name, cases);
}

PropertyOutcome crossover_conserves_bits(std::uint64_t seed, std::size_t cases) {
  const std::string name = "crossover conserves bits per locus";
  Rng rng(seed);
  for (std::size_t i = 0; i < cases; ++i) {
    const std::size_t len = 2 + rng.below(100);
    const Genome a = random_genome(rng, len);
    const Genome b = random_genome(rng, len);
    const auto [c, d] = two_point_crossover(a, b, rng.uniform(), rng);
    if (c.size() != len || d.size() != len) {
      return fail(name, fmt::format("case {}: child length changed", i));
    }
    for (std::size_t k = 0; k < len; ++k) {
      if (a[k] + b[k] != c[k] + d[k] || std::min(a[k], b[k]) != std::min(c[k], d[k])) {
        return fail(name, fmt::format("case {}: locus {} lost a bit", i, k));
      }
    }
  }
  return pass(name, cases);
}

PropertyOutcome deterministic_outputs(double total_depth, std::uint64_t seed) {
  const std::string name = "same seed gives byte-identical outputs";
  app::Settings settings;
  settings.ga.seed = seed;
  const auto render = [&] {
    const auto report = app::optimize_command(settings, total_depth, 2);
    std::string out;
    for (const auto& t : report.tables) {
      out += t.name + '\n' + t.render();
    }
    for (const auto& line : report.summary) {
      out += line + '\n';
    }
    return out;
  };
  const auto first = render();
  const auto second = render();
  if (first != second) {
    return fail(name, fmt::format("d_t {:g} seed {}: outputs differ", total_depth, seed));
  }
  return pass(name, 2);
}

PropertyOutcome lookup_matches_rational(std::uint64_t seed, std::size_t cases) {
  const std::string name = "tick enumeration matches rational arithmetic";
  Rng rng(seed);
  const auto decimal = [](std::int64_t hundredths) {
    return fmt::format("{}.{:02}", hundredths / 100, hundredths % 100);
  };
  static constexpr std::int64_t kSteps[] = {1, 5, 10, 20, 25, 50};
  for (std::size_t i = 0; i < cases; ++i) {
    const std::int64_t dt = 50 + static_cast<std::int64_t>(rng.below(1951));
    const auto grid = [&](std::int64_t lo_max) {
      const std::int64_t step = kSteps[rng.below(std::size(kSteps))];
      const std::int64_t lo = step * (1 + static_cast<std::int64_t>(rng.below(static_cast<std::uint64_t>(lo_max / step))));
      const std::int64_t hi = lo + step * static_cast<std::int64_t>(rng.below(40));
      return std::tuple{lo, hi, step};
    };
    const auto [s_lo, s_hi, s_step] = grid(150);
    const auto [r_lo, r_hi, r_step] = grid(300);

    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> expected;
    const Rational total = Rational::parse(decimal(dt));
    const Rational rs_step = Rational::parse(decimal(s_step));
    const Rational rr_step = Rational::parse(decimal(r_step));
    for (Rational ds = Rational::parse(decimal(s_lo)); ds <= Rational::parse(decimal(s_hi)); ds = ds + rs_step) {
      for (Rational dr = Rational::parse(decimal(r_lo)); dr <= Rational::parse(decimal(r_hi)); dr = dr + rr_step) {
        const Rational n = (total - ds) / dr;
        if (Rational(0) < n && n.is_integer()) {
          expected.emplace_back(ds.num * 100 / ds.den, dr.num * 100 / dr.den, n.num);
        }
      }
    }

    const DepthRange finish{std::stod(decimal(s_lo)), std::stod(decimal(s_hi)), std::stod(decimal(s_step))};
    const DepthRange rough{std::stod(decimal(r_lo)), std::stod(decimal(r_hi)), std::stod(decimal(r_step))};
    std::vector<std::tuple<std::int64_t, std::int64_t, std::int64_t>> actual;
    try {
      const auto table = enumerate_pairs(DepthTicks::from_mm(std::stod(decimal(dt))), finish, rough);
      for (const auto& e : table.entries()) {
        actual.emplace_back(e.finish_depth.count(), e.rough_depth.count(), e.rough_passes);
      }
    } catch (const NoFeasibleAllocation&) {
    }
    if (actual != expected) {
      return fail(name, fmt::format("d_t {} with d_s {}..{}/{} and d_r {}..{}/{}: {} pairs vs {} expected",
                                    decimal(dt), decimal(s_lo), decimal(s_hi), decimal(s_step), decimal(r_lo),
                                    decimal(r_hi), decimal(r_step), actual.size(), expected.size()));
    }
  }
  return pass(name, cases);
}

std::vector<PropertyOutcome> run_property_suite() {
  const Model model{ProblemData{}};
  GaConfig small;
  small.population = 20;
  small.generations = 60;
  static constexpr std::uint64_t kSeeds[] = {1, 2, 3, 4, 5, 6, 7, 8};
  std::vector<PropertyOutcome> out;
  out.push_back(elitism_monotone(model, 6.0, GaConfig{}, std::span(kSeeds).first(2)));
  out.push_back(elitism_monotone(model, 11.0, small, kSeeds));
  out.push_back(decoded_bounds(model, 11, 2000));
  out.push_back(feasibility_dominance(12, 5000));
  out.push_back(violation_matches_slacks(model, 13, 5000));
  out.push_back(crossover_conserves_bits(14, 5000));
  out.push_back(deterministic_outputs(6.0, 15));
  out.push_back(lookup_matches_rational(16, 1000));
  return out;
}

} // namespace facemill::testing
