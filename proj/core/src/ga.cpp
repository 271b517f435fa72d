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

#include "facemill/ga.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>

#include "facemill/error.hpp"

namespace facemill {

void validate(const GaConfig& c) {
  if (c.population < 2 || c.population % 2 != 0) {
    throw InvalidInput("population size must be even and at least 2");
  }
  if (!(c.crossover_prob >= 0.0 && c.crossover_prob <= 1.0)) {
    throw InvalidInput("crossover probability must lie in [0, 1]");
  }
  if (!(c.mutation_prob >= 0.0 && c.mutation_prob <= 1.0)) {
    throw InvalidInput("mutation probability must lie in [0, 1]");
  }
  if (c.bits_per_real < 1 || c.bits_per_real > 52) {
    throw InvalidInput("bits per real variable must lie in [1, 52]");
  }
  if (c.index_bits && (*c.index_bits < 1 || *c.index_bits > 62)) {
    throw InvalidInput("index bits must lie in [1, 62]");
  }
  if (!(c.gap_threshold >= 0.0)) {
    throw InvalidInput("convergence gap threshold must be non-negative");
  }
}

std::uint64_t block_value(BitBlock bits) {
  std::uint64_t v = 0;
  for (auto b : bits) {
    v = (v << 1) | (b & 1u);
  }
  return v;
}

namespace {

std::uint64_t block_max(std::size_t len) {
  return len >= 64 ? std::numeric_limits<std::uint64_t>::max() : (std::uint64_t{1} << len) - 1;
}

} // namespace

double decode_real(BitBlock bits, double lb, double ub) {
  if (bits.empty()) {
    return lb;
  }
  const std::uint64_t dv = block_value(bits);
  const std::uint64_t max = block_max(bits.size());
  if (dv == max) {
    return ub;
  }
  return lb + static_cast<double>(dv) * (ub - lb) / static_cast<double>(max);
}

std::size_t decode_index(BitBlock bits, std::size_t table_size) {
  if (table_size <= 1 || bits.empty()) {
    return 1;
  }
  using wide = unsigned __int128;
  const wide dv = block_value(bits);
  const wide max = block_max(bits.size());
  // round half up of dv (size - 1) / max
  const wide num = 2 * dv * (table_size - 1) + max;
  return 1 + static_cast<std::size_t>(num / (2 * max));
}

unsigned default_index_bits(std::size_t table_size) {
  if (table_size <= 2) {
    return 1;
  }
  return static_cast<unsigned>(std::bit_width(table_size - 1));
}

BitBlock GenomeLayout::block(const Genome& g, std::size_t which) const {
  const std::size_t start = which * real_bits;
  const std::size_t len = which < 4 ? real_bits : index_bits;
  return BitBlock(g).subspan(start, len);
}

GenomeLayout make_layout(const GaConfig& config, std::size_t table_size) {
  GenomeLayout layout;
  layout.real_bits = config.bits_per_real;
  layout.index_bits = config.index_bits.value_or(default_index_bits(table_size));
  return layout;
}

Plan decode_genome(const Genome& genome, const GenomeLayout& layout, const PairTable& table, const Model& model) {
  if (genome.size() != layout.length()) {
    throw InvalidInput("genome length does not match layout");
  }
  const auto& p = model.problem();
  Plan plan;
  plan.finish.speed = decode_real(layout.block(genome, 0), p.V_s.min, p.V_s.max);
  plan.finish.feed = decode_real(layout.block(genome, 1), p.f_s.min, model.feed_upper_bound(PassKind::finish));
  plan.rough.speed = decode_real(layout.block(genome, 2), p.V_r.min, p.V_r.max);
  plan.rough.feed = decode_real(layout.block(genome, 3), p.f_r.min, model.feed_upper_bound(PassKind::rough));
  const auto& pair = table.at(decode_index(layout.block(genome, 4), table.size()));
  plan.finish.depth = pair.d_s();
  plan.rough.depth = pair.d_r();
  plan.rough_passes = pair.rough_passes;
  return plan;
}

bool wins_tournament(const Individual& a, const Individual& b) noexcept { return !ranks_before(b, a); }

bool ranks_before(const Individual& a, const Individual& b) noexcept {
  if (a.feasible() != b.feasible()) {
    return a.feasible();
  }
  if (a.feasible()) {
    return a.cost < b.cost;
  }
  return a.violation < b.violation;
}

Population tournament_select(const Population& population, Rng& rng) {
  const std::size_t n = population.size();
  const std::size_t half = n / 2;
  Population out;
  out.reserve(n);
  const auto pass = [&](const std::vector<std::size_t>& order) {
    for (std::size_t i = 0; i < half; ++i) {
      const auto& a = population[order[i]];
      const auto& b = population[order[i + half]];
      out.push_back(wins_tournament(a, b) ? a : b);
    }
  };
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  pass(order);
  rng.shuffle(std::span<std::size_t>(order));
  pass(order);
  // odd N: one extra slot from the shuffled order
  if (out.size() < n) {
    out.push_back(population[order[n - 1]]);
  }
  return out;
}

void two_point_swap(Genome& a, Genome& b, std::size_t first, std::size_t last) {
  if (a.size() != b.size() || first > last || last > a.size()) {
    throw InvalidInput("invalid crossover segment");
  }
  std::swap_ranges(a.begin() + static_cast<std::ptrdiff_t>(first), a.begin() + static_cast<std::ptrdiff_t>(last),
                   b.begin() + static_cast<std::ptrdiff_t>(first));
}

std::pair<Genome, Genome> two_point_crossover(const Genome& a, const Genome& b, double p_c, Rng& rng) {
  if (a.size() != b.size()) {
    throw InvalidInput("crossover parents differ in length");
  }
  std::pair<Genome, Genome> children{a, b};
  const bool cross = rng.uniform() < p_c;
  const std::size_t len = a.size();
  if (!cross || len < 3) {
    return children;
  }
  // two distinct interior cut points in [1, len - 1]
  std::size_t first = 1 + static_cast<std::size_t>(rng.below(len - 1));
  std::size_t second = 1 + static_cast<std::size_t>(rng.below(len - 2));
  if (second >= first) {
    ++second;
  }
  if (first > second) {
    std::swap(first, second);
  }
  two_point_swap(children.first, children.second, first, second);
  return children;
}

void mutate(Genome& genome, double p_m, Rng& rng) {
  for (auto& bit : genome) {
    if (rng.uniform() < p_m) {
      bit ^= 1u;
    }
  }
}

Population elitist_replace(const Population& original, const Population& offspring, ReplacementCase* which) {
  const std::size_t n = original.size();
  std::vector<const Individual*> feasible;
  std::vector<const Individual*> infeasible;
  for (const auto* pool : {&original, &offspring}) {
    for (const auto& ind : *pool) {
      (ind.feasible() ? feasible : infeasible).push_back(&ind);
    }
  }
  Population out;
  out.reserve(n);
  if (feasible.size() > n) {
    std::stable_sort(feasible.begin(), feasible.end(),
                     [](const Individual* a, const Individual* b) { return a->cost < b->cost; });
    for (std::size_t i = 0; i < n; ++i) {
      out.push_back(*feasible[i]);
    }
    if (which) *which = ReplacementCase::more_feasible;
  } else if (feasible.size() < n) {
    for (const auto* f : feasible) {
      out.push_back(*f);
    }
    std::stable_sort(infeasible.begin(), infeasible.end(),
                     [](const Individual* a, const Individual* b) { return a->violation < b->violation; });
    for (std::size_t i = 0; out.size() < n && i < infeasible.size(); ++i) {
      out.push_back(*infeasible[i]);
    }
    if (which) *which = ReplacementCase::fewer_feasible;
  } else {
    for (const auto* f : feasible) {
      out.push_back(*f);
    }
    if (which) *which = ReplacementCase::exactly_feasible;
  }
  return out;
}

GenerationStats population_stats(const Population& population, std::size_t generation) {
  GenerationStats s;
  s.generation = generation;
  if (population.empty()) {
    return s;
  }
  const auto best = std::min_element(population.begin(), population.end(), ranks_before);
  double sum = 0.0;
  double min_cv = std::numeric_limits<double>::infinity();
  for (const auto& ind : population) {
    sum += ind.cost;
    min_cv = std::min(min_cv, ind.violation);
  }
  s.best_cost = best->cost;
  s.mean_cost = sum / static_cast<double>(population.size());
  s.best_violation = min_cv;
  s.gap = (s.mean_cost - s.best_cost) / s.best_cost;
  return s;
}

GaEngine::GaEngine(const Model& model, PairTable table, GaConfig config)
    : model_(model), table_(std::move(table)), config_(config) {
  validate(config_);
  layout_ = make_layout(config_, table_.size());
}

Individual GaEngine::evaluate(Genome genome) const {
  Individual ind;
  ind.plan = decode_genome(genome, layout_, table_, model_);
  ind.genome = std::move(genome);
  ind.cost = model_.unit_cost(ind.plan);
  ind.violation = model_.constraint_report(ind.plan).violation;
  return ind;
}

Population GaEngine::initialize(Rng& rng) const {
  Population pop;
  pop.reserve(config_.population);
  const std::size_t len = layout_.length();
  for (std::size_t i = 0; i < config_.population; ++i) {
    Genome g(len);
    for (auto& bit : g) {
      bit = rng.uniform() <= 0.5 ? 0 : 1;
    }
    pop.push_back(evaluate(std::move(g)));
  }
  return pop;
}

RunResult GaEngine::run() const {
  Rng rng(config_.seed);
  RunResult result;
  result.seed = config_.seed;

  Population pop = initialize(rng);
  result.evaluations = pop.size();
  const auto record = [&](std::size_t gen) {
    const auto stats = population_stats(pop, gen);
    if (!result.converged_generation && stats.best_violation == 0.0 && stats.gap < config_.gap_threshold) {
      result.converged_generation = gen;
    }
    result.history.push_back(stats);
  };
  record(0);

  const std::size_t n = pop.size();
  for (std::size_t gen = 1; gen <= config_.generations; ++gen) {
    const Population selected = tournament_select(pop, rng);
    std::vector<Genome> children;
    children.reserve(n);
    for (std::size_t i = 0; i + 1 < n; i += 2) {
      auto [a, b] = two_point_crossover(selected[i].genome, selected[i + 1].genome, config_.crossover_prob, rng);
      children.push_back(std::move(a));
      children.push_back(std::move(b));
    }
    for (auto& g : children) {
      mutate(g, config_.mutation_prob, rng);
    }
    Population offspring;
    offspring.reserve(n);
    for (auto& g : children) {
      offspring.push_back(evaluate(std::move(g)));
    }
    result.evaluations += offspring.size();
    pop = elitist_replace(pop, offspring);
    record(gen);
  }

  result.best = *std::min_element(pop.begin(), pop.end(), ranks_before);
  return result;
}

RunResult run(const Model& model, double total_depth, const GaConfig& config) {
  GaEngine engine(model, enumerate_pairs(total_depth, model.problem()), config);
  return engine.run();
}

} // namespace facemill
