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

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "facemill/app/commands.hpp"
#include "facemill/app/config.hpp"
#include "facemill/app/report.hpp"
#include "facemill/error.hpp"

namespace fm = facemill;
namespace app = facemill::app;

namespace {

enum Exit : int { kOk = 0, kUsage = 2, kInfeasible = 3, kIo = 4 };

struct Overrides {
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> population;
  std::optional<std::size_t> generations;
  std::optional<double> crossover;
  std::optional<double> mutation;
  std::optional<unsigned> bits;
};

fm::SolverMode parse_engine(const std::string& s) {
  return s == "ga" ? fm::SolverMode::ga : fm::SolverMode::oracle;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Face-milling unit-cost optimizer"};
  cli.require_subcommand(1);

  std::optional<std::string> config_path;
  std::optional<std::string> out_dir;
  Overrides ov;
  cli.add_option("--config", config_path, "key = value configuration file");
  cli.add_option("--out", out_dir, "directory for CSV, summary and manifest files");
  cli.add_option("--seed", ov.seed, "base RNG seed");

  double dt = 6.0;
  auto* derive = cli.add_subcommand("derive", "derive model coefficients and check them against reference values");

  auto* table = cli.add_subcommand("table", "list feasible (d_s, d_r) pairs for a total depth");
  table->add_option("--dt", dt, "total depth of cut, mm")->required();

  std::size_t runs = 1;
  auto* optimize = cli.add_subcommand("optimize", "run the genetic algorithm");
  optimize->add_option("--dt", dt, "total depth of cut, mm")->required();
  optimize->add_option("--seed", ov.seed, "base RNG seed");
  optimize->add_option("--runs", runs, "independent runs with consecutive seeds")->check(CLI::PositiveNumber);
  optimize->add_option("--pop", ov.population, "population size");
  optimize->add_option("--gens", ov.generations, "generations");
  optimize->add_option("--pc", ov.crossover, "crossover probability");
  optimize->add_option("--pm", ov.mutation, "per-bit mutation probability");
  optimize->add_option("--bits", ov.bits, "bits per real variable");

  std::string method = "candidates";
  auto* oracle = cli.add_subcommand("oracle", "exhaustive per-pair optimum and global optimum");
  oracle->add_option("--dt", dt, "total depth of cut, mm")->required();
  oracle->add_option("--method", method, "per-pass solver")->check(CLI::IsMember({"candidates", "grid"}));

  double from = 6.0, to = 16.0, step = 1.0;
  std::string engine = "oracle";
  auto* sweep = cli.add_subcommand("sweep", "optimum over a range of total depths");
  sweep->add_option("--from", from, "first total depth, mm");
  sweep->add_option("--to", to, "last total depth, mm");
  sweep->add_option("--step", step, "depth increment, mm");
  sweep->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "ga"}));

  std::string kind = "both";
  double m_from = 0.9, m_to = 1.2, m_step = 0.1;
  auto* sensitivity = cli.add_subcommand("sensitivity", "optimum cost under scaled force and power limits");
  sensitivity->add_option("--dt", dt, "total depth of cut, mm");
  sensitivity->add_option("--kind", kind)->check(CLI::IsMember({"force", "power", "both"}));
  sensitivity->add_option("--from", m_from, "first multiplier");
  sensitivity->add_option("--to", m_to, "last multiplier");
  sensitivity->add_option("--step", m_step, "multiplier increment");
  sensitivity->add_option("--engine", engine)->check(CLI::IsMember({"oracle", "ga"}));

  fm::EstimateSettings est;
  auto* estimate = cli.add_subcommand("estimate", "closed-form estimate without optimization");
  estimate->add_option("--dt", dt, "total depth of cut, mm")->required();
  estimate->add_flag("--allow-extra-pass", est.allow_extra_pass, "permit one more rough pass if needed");

  std::size_t length = 65, limit = 5000;
  auto* popsize = cli.add_subcommand("popsize", "schema-based population sizing");
  popsize->add_option("--l", length, "chromosome length, bits")->check(CLI::PositiveNumber);
  popsize->add_option("--max", limit, "largest population considered")->check(CLI::PositiveNumber);

  std::vector<double> pm_grid{0.01, 0.02, 0.05, 0.1};
  std::size_t sr_runs = 20;
  auto* success = cli.add_subcommand("success-rate", "share of GA runs reaching the global optimum");
  success->add_option("--dt", dt, "total depth of cut, mm");
  success->add_option("--pm", pm_grid, "mutation probabilities")->delimiter(',');
  success->add_option("--runs", sr_runs, "runs per probability")->check(CLI::PositiveNumber);

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = cli.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    app::Settings settings = app::load_config(config_path ? std::optional<std::filesystem::path>(*config_path)
                                                          : std::nullopt);
    if (ov.seed) settings.ga.seed = *ov.seed;
    if (ov.population) settings.ga.population = *ov.population;
    if (ov.generations) settings.ga.generations = *ov.generations;
    if (ov.crossover) settings.ga.crossover_prob = *ov.crossover;
    if (ov.mutation) settings.ga.mutation_prob = *ov.mutation;
    if (ov.bits) settings.ga.bits_per_real = *ov.bits;
    app::check(settings);

    app::Report report;
    app::RunManifest manifest;
    manifest.arguments.assign(argv + 1, argv + argc);
    manifest.seeds.push_back(settings.ga.seed);

    if (*derive) {
      manifest.subcommand = "derive";
      report = app::derive_command(settings);
    } else if (*table) {
      manifest.subcommand = "table";
      report = app::table_command(settings, dt);
    } else if (*optimize) {
      manifest.subcommand = "optimize";
      for (std::size_t i = 1; i < runs; ++i) {
        manifest.seeds.push_back(settings.ga.seed + i);
      }
      report = app::optimize_command(settings, dt, runs);
    } else if (*oracle) {
      manifest.subcommand = "oracle";
      report = app::oracle_command(settings, dt,
                                   method == "grid" ? fm::PassMethod::grid : fm::PassMethod::candidates);
    } else if (*sweep) {
      manifest.subcommand = "sweep";
      report = app::sweep_command(settings, from, to, step, parse_engine(engine));
    } else if (*sensitivity) {
      manifest.subcommand = "sensitivity";
      std::vector<fm::LimitKind> kinds;
      if (kind != "power") kinds.push_back(fm::LimitKind::force);
      if (kind != "force") kinds.push_back(fm::LimitKind::power);
      const auto mult = app::linear_grid(m_from, m_to, m_step);
      report = app::sensitivity_command(settings, dt, kinds, mult, parse_engine(engine));
    } else if (*estimate) {
      manifest.subcommand = "estimate";
      report = app::estimate_command(settings, dt, est);
    } else if (*popsize) {
      manifest.subcommand = "popsize";
      manifest.seeds.clear();
      report = app::popsize_command(length, limit);
    } else if (*success) {
      manifest.subcommand = "success-rate";
      for (std::size_t i = 1; i < sr_runs; ++i) {
        manifest.seeds.push_back(settings.ga.seed + i);
      }
      report = app::success_rate_command(settings, dt, pm_grid, sr_runs);
    }
    manifest.settings = settings;

    app::emit_report(report, std::move(manifest),
                     out_dir ? std::optional<std::filesystem::path>(*out_dir) : std::nullopt, std::cout, std::cerr);
    return kOk;
  } catch (const app::ConfigError& e) {
    std::cerr << "config error" << (e.key().empty() ? "" : " [" + e.key() + "]") << ": " << e.what() << '\n';
    return kUsage;
  } catch (const fm::InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const fm::InfeasiblePass& e) {
    std::cerr << "infeasible (" << e.binding_constraint() << "): " << e.what() << '\n';
    return kInfeasible;
  } catch (const fm::NoFeasibleAllocation& e) {
    std::cerr << "no feasible allocation: " << e.what() << '\n';
    return kInfeasible;
  } catch (const fm::EstimationFailure& e) {
    std::cerr << "estimate failed: " << e.what() << '\n';
    return kInfeasible;
  } catch (const app::IoError& e) {
    std::cerr << "i/o error: " << e.what() << '\n';
    return kIo;
  }
}
