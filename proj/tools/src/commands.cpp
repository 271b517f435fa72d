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

#include "facemill/app/commands.hpp"

#include <cmath>

#include <fmt/format.h>

#include "facemill/error.hpp"
#include "facemill/ga.hpp"
#include "facemill/lookup.hpp"
#include "facemill/schema.hpp"

namespace facemill::app {
namespace {

std::string fixed(double v, int digits) {
  if (std::isnan(v)) {
    return "nan";
  }
  return fmt::format("{:.{}f}", v, digits);
}

std::string depth(double mm) { return fmt::format("{:g}", mm); }

Model make_model(const Settings& s) { return Model(s.problem, s.coefficients); }

std::vector<std::string> plan_cells(const Model& model, double dt, const Plan& plan, double violation, double cost) {
  const auto& f = plan.finish;
  const auto& r = plan.rough;
  return {depth(dt),
          fixed(f.speed, 3),
          fixed(r.speed, 3),
          fixed(f.feed, 5),
          fixed(r.feed, 5),
          depth(f.depth),
          depth(r.depth),
          std::to_string(plan.rough_passes),
          fmt::format("{:g}", violation),
          fixed(cost, 5),
          fixed(model.tool_life(PassKind::finish, f.speed, f.feed, f.depth), 1),
          fixed(model.tool_life(PassKind::rough, r.speed, r.feed, r.depth), 1)};
}

} // namespace

std::vector<double> linear_grid(double from, double to, double step) {
  if (!(step > 0.0) || to < from) {
    throw InvalidInput("grid needs from <= to and a positive step");
  }
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 0.5));
  std::vector<double> out;
  for (std::size_t i = 0; i <= count; ++i) {
    // snap away accumulated binary noise
    out.push_back(std::round((from + static_cast<double>(i) * step) * 1e9) / 1e9);
  }
  return out;
}

Report derive_command(const Settings& settings) {
  const auto coeffs = derive_coefficients(settings.problem);
  Report rep;
  CsvDocument doc{"derive", {"name", "derived", "reference", "rel_diff", "status"}, {}};
  for (const auto& c : coeffs.consistency.checks) {
    doc.rows.push_back({c.name, fmt::format("{:.9g}", c.derived), fmt::format("{:.9g}", c.reference),
                        fmt::format("{:.3e}", c.relative_difference), c.status});
  }
  doc.rows.push_back({"n4", fmt::format("{:.9g}", coeffs.n4), "", "", "input"});
  doc.rows.push_back({"n5", fmt::format("{:.9g}", coeffs.n5), "", "", "input"});
  doc.rows.push_back({"k0_t_p", fmt::format("{:.9g}", coeffs.preparation_cost), "", "", "derived"});
  rep.tables.push_back(std::move(doc));

  rep.summary.push_back(fmt::format("coefficient source in use: {}", to_string(settings.coefficients)));
  rep.summary.push_back(fmt::format("L_tr = {:g} mm (geometric value {:g} mm)", coeffs.rough_travel,
                                    geometric_rough_travel(settings.problem)));
  rep.summary.push_back(fmt::format("L_ts = {:g} mm (geometric value {:g} mm)", coeffs.finish_travel,
                                    geometric_finish_travel(settings.problem)));
  for (const auto& w : coeffs.consistency.warnings) {
    rep.summary.push_back("warning: " + w);
  }
  return rep;
}

Report table_command(const Settings& settings, double total_depth) {
  const auto table = enumerate_pairs(total_depth, settings.problem);
  Report rep;
  CsvDocument doc{"table", {"pair", "ds_mm", "dr_mm", "n"}, {}};
  for (const auto& e : table.entries()) {
    doc.rows.push_back({std::to_string(e.index), depth(e.d_s()), depth(e.d_r()), std::to_string(e.rough_passes)});
  }
  rep.tables.push_back(std::move(doc));
  rep.summary.push_back(fmt::format("d_t = {:g} mm: {} feasible (d_s, d_r) pairs", total_depth, table.size()));
  return rep;
}

Report optimize_command(const Settings& settings, double total_depth, std::size_t runs) {
  if (runs < 1) {
    throw InvalidInput("runs must be at least 1");
  }
  const Model model = make_model(settings);
  const auto table = enumerate_pairs(total_depth, settings.problem);
  Report rep;
  CsvDocument results{"optimize", {"dt", "Vs", "Vr", "fs", "fr", "ds", "dr", "n", "CV", "UC", "Ts", "Tr"}, {}};
  std::optional<RunResult> best;
  std::vector<RunResult> all;
  for (std::size_t i = 0; i < runs; ++i) {
    GaConfig cfg = settings.ga;
    cfg.seed = settings.ga.seed + i;
    const GaEngine engine(model, table, cfg);
    auto result = engine.run();
    results.rows.push_back(plan_cells(model, total_depth, result.best.plan, result.best.violation, result.best.cost));

    CsvDocument hist{runs == 1 ? std::string("history") : fmt::format("history_seed{}", cfg.seed),
                     {"gen", "best", "avg", "gap"},
                     {},
                     false};
    for (const auto& h : result.history) {
      hist.rows.push_back({std::to_string(h.generation), fixed(h.best_cost, 6), fixed(h.mean_cost, 6),
                           fmt::format("{:.6e}", h.gap)});
    }
    rep.tables.push_back(std::move(hist));
    if (!best || ranks_before(result.best, best->best)) {
      best = result;
    }
    all.push_back(std::move(result));
  }
  rep.tables.insert(rep.tables.begin(), std::move(results));

  const GenomeLayout layout = make_layout(settings.ga, table.size());
  rep.summary.push_back(fmt::format("d_t = {:g} mm: {} pairs, genome length {} bits, N = {}, {} generations",
                                    total_depth, table.size(), layout.length(), settings.ga.population,
                                    settings.ga.generations));
  rep.summary.push_back(fmt::format("best UC = {:.5f} $/piece (seed {}), CV = {:g}", best->best.cost, best->seed,
                                    best->best.violation));
  if (best->converged_generation) {
    rep.summary.push_back(fmt::format("best/average gap first below {:g}% at generation {}",
                                      100.0 * settings.ga.gap_threshold, *best->converged_generation));
  }
  if (runs > 1) {
    const auto global = global_optimum(model, total_depth);
    std::size_t ok = 0;
    for (const auto& r : all) {
      ok += r.best.feasible() && r.best.cost <= global.cost * (1.0 + 1e-3);
    }
    rep.summary.push_back(fmt::format("oracle global optimum {:.5f}; {} of {} runs within 0.1% ({:.1f}%)", global.cost,
                                      ok, runs, 100.0 * static_cast<double>(ok) / static_cast<double>(runs)));
  }
  for (auto& line : comparison_lines(total_depth, best->best.cost)) {
    rep.summary.push_back(std::move(line));
  }
  return rep;
}

Report oracle_command(const Settings& settings, double total_depth, PassMethod method) {
  const Model model = make_model(settings);
  const auto table = enumerate_pairs(total_depth, settings.problem);
  const auto rows = enumerate_local_optima(model, table, method);
  Report rep;
  CsvDocument doc{"oracle", {"ds", "dr", "n", "UCs", "UCr", "UC"}, {}};
  const auto cells = [](const OracleRow& r, std::string first) {
    if (!r.feasible) {
      return std::vector<std::string>{std::move(first), depth(r.pair.d_r()), std::to_string(r.pair.rough_passes),
                                      "infeasible", "infeasible", "infeasible"};
    }
    return std::vector<std::string>{std::move(first),          depth(r.pair.d_r()), std::to_string(r.pair.rough_passes),
                                    fixed(r.finish.cost, 5), fixed(r.rough.cost, 5), fixed(r.cost, 5)};
  };
  for (const auto& r : rows) {
    doc.rows.push_back(cells(r, depth(r.pair.d_s())));
  }
  const auto& g = global_optimum(rows);
  doc.rows.push_back(cells(g, "*" + depth(g.pair.d_s())));
  rep.tables.push_back(std::move(doc));

  rep.summary.push_back(fmt::format("global optimum at pair {} (d_s = {:g}, d_r = {:g}, n = {}): UC = {:.5f}",
                                    g.pair.index, g.pair.d_s(), g.pair.d_r(), g.pair.rough_passes, g.cost));
  rep.summary.push_back(fmt::format("finish V = {:.3f} f = {:.5f}; rough V = {:.3f} f = {:.5f}", g.finish.speed,
                                    g.finish.feed, g.rough.speed, g.rough.feed));
  for (const auto& r : rows) {
    if (!r.feasible) {
      rep.summary.push_back(fmt::format("pair {} infeasible ({})", r.pair.index, r.infeasibility));
    }
  }
  return rep;
}

Report sweep_command(const Settings& settings, double from, double to, double step, SolverMode mode) {
  const Model model = make_model(settings);
  const auto sweep = dt_sweep(model, from, to, step, SolverOptions{mode, settings.ga});
  Report rep;
  CsvDocument doc{"sweep", {"dt", "n", "ds", "dr", "fr", "Vs", "Vr", "fs", "UC", "Ts", "Tr"}, {}};
  for (const auto& r : sweep.rows) {
    const auto& p = r.plan;
    doc.rows.push_back({depth(r.total_depth), std::to_string(p.rough_passes), depth(p.finish.depth),
                        depth(p.rough.depth), fixed(p.rough.feed, 5), fixed(p.finish.speed, 3),
                        fixed(p.rough.speed, 3), fixed(p.finish.feed, 5), fixed(r.cost, 5), fixed(r.finish_life, 1),
                        fixed(r.rough_life, 1)});
  }
  rep.tables.push_back(std::move(doc));
  rep.summary.push_back(fmt::format("engine: {}; {} rows", to_string(mode), sweep.rows.size()));
  for (double d : sweep.skipped) {
    rep.summary.push_back(fmt::format("d_t = {:g} mm skipped: no feasible allocation", d));
  }
  return rep;
}

Report sensitivity_command(const Settings& settings, double total_depth, std::span<const LimitKind> kinds,
                           std::span<const double> multipliers, SolverMode mode) {
  const Model model = make_model(settings);
  const auto sweep = sensitivity_sweep(model, total_depth, kinds, multipliers, SolverOptions{mode, settings.ga});
  Report rep;
  CsvDocument doc{"sensitivity", {"kind", "multiplier", "UC"}, {}};
  for (const auto& p : sweep.points) {
    doc.rows.push_back({to_string(p.kind), fmt::format("{:g}", p.multiplier), p.feasible ? fixed(p.cost, 5) : "infeasible"});
  }
  rep.tables.push_back(std::move(doc));
  const auto slope_line = [&](const char* name, const std::optional<double>& s) {
    if (s) {
      rep.summary.push_back(fmt::format("{} slope dUC/dmultiplier = {:.6f}", name, *s));
    }
  };
  slope_line("force", sweep.force_slope);
  slope_line("power", sweep.power_slope);
  if (sweep.force_slope && sweep.power_slope) {
    rep.summary.push_back(std::abs(*sweep.power_slope) > std::abs(*sweep.force_slope)
                              ? "optimal cost is more sensitive to the power limit"
                              : "optimal cost is more sensitive to the force limit");
  }
  for (const auto& p : sweep.points) {
    if (!p.feasible) {
      rep.summary.push_back(fmt::format("{} x{:g}: {}", to_string(p.kind), p.multiplier, p.note));
    }
  }
  return rep;
}

Report estimate_command(const Settings& settings, double total_depth, const EstimateSettings& estimate) {
  const Model model = make_model(settings);
  const auto est = estimate_plan(model, total_depth, estimate);
  Report rep;
  CsvDocument doc{"estimate", {"dt", "n", "ds", "dr", "fs", "fr", "Vs", "Vr", "UC"}, {}};
  const auto& p = est.plan;
  doc.rows.push_back({depth(total_depth), std::to_string(p.rough_passes), depth(p.finish.depth),
                      depth(p.rough.depth), fixed(p.finish.feed, 5), fixed(p.rough.feed, 5),
                      fixed(p.finish.speed, 3), fixed(p.rough.speed, 3), fixed(est.cost, 5)});
  rep.tables.push_back(std::move(doc));
  rep.summary = est.notes;
  return rep;
}

Report popsize_command(std::size_t string_length, std::size_t limit) {
  const auto sizing = size_population(string_length, limit);
  Report rep;
  CsvDocument doc{"popsize", {"mu", "G"}, {}};
  for (const auto& p : sizing.curve) {
    doc.rows.push_back({std::to_string(p.mu), fmt::format("{:.6e}", static_cast<double>(p.gain))});
  }
  rep.tables.push_back(std::move(doc));
  rep.summary.push_back(fmt::format("l = {}: G_max = {:.5e} at mu = {}", string_length,
                                    static_cast<double>(sizing.max_gain), sizing.argmax));
  rep.summary.push_back(fmt::format("G >= 0.999 G_max first at mu = {}", sizing.recommended));
  return rep;
}

std::vector<SuccessPoint> run_success_rate(const Settings& settings, double total_depth,
                                           std::span<const double> pm_grid, std::size_t runs_per_point,
                                           double tolerance) {
  if (runs_per_point < 1) {
    throw InvalidInput("runs per point must be at least 1");
  }
  const Model model = make_model(settings);
  const auto table = enumerate_pairs(total_depth, settings.problem);
  const double global = global_optimum(enumerate_local_optima(model, table)).cost;
  std::vector<SuccessPoint> out;
  for (double pm : pm_grid) {
    SuccessPoint pt;
    pt.mutation_prob = pm;
    pt.runs = runs_per_point;
    pt.global_cost = global;
    for (std::size_t i = 0; i < runs_per_point; ++i) {
      GaConfig cfg = settings.ga;
      cfg.mutation_prob = pm;
      cfg.seed = settings.ga.seed + i;
      const auto result = GaEngine(model, table, cfg).run();
      if (result.best.feasible() && result.best.cost <= global * (1.0 + tolerance)) {
        ++pt.successes;
      }
    }
    out.push_back(pt);
  }
  return out;
}

Report success_rate_command(const Settings& settings, double total_depth, std::span<const double> pm_grid,
                            std::size_t runs_per_point) {
  const auto points = run_success_rate(settings, total_depth, pm_grid, runs_per_point);
  Report rep;
  CsvDocument doc{"success_rate", {"pm", "runs", "successes", "success_pct"}, {}};
  for (const auto& p : points) {
    doc.rows.push_back({fmt::format("{:g}", p.mutation_prob), std::to_string(p.runs), std::to_string(p.successes),
                        fixed(100.0 * p.rate(), 1)});
  }
  rep.tables.push_back(std::move(doc));
  if (!points.empty()) {
    rep.summary.push_back(fmt::format("oracle global optimum at d_t = {:g} mm: {:.5f}; success = within 0.1%",
                                      total_depth, points.front().global_cost));
  }
  return rep;
}

} // namespace facemill::app
