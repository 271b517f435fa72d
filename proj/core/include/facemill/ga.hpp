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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "facemill/lookup.hpp"
#include "facemill/model.hpp"
#include "facemill/random.hpp"

namespace facemill {

struct GaConfig {
  std::size_t population = 750;
  std::size_t generations = 100;
  double crossover_prob = 0.8;
  double mutation_prob = 0.05;
  unsigned bits_per_real = 15;
  // Width of the table-index block; ceil(log2(table size)) when unset.
  std::optional<unsigned> index_bits;
  std::uint64_t seed = 1;
  // Relative best/average gap marking convergence (reporting only).
  double gap_threshold = 0.0025;
};

// Throws InvalidInput.
void validate(const GaConfig& config);

using Genome = std::vector<std::uint8_t>;
using BitBlock = std::span<const std::uint8_t>;

// Unsigned value of a block, most significant bit first.
std::uint64_t block_value(BitBlock bits);

// lb + DV (ub - lb) / (2^len - 1); the all-ones block maps to ub exactly.
double decode_real(BitBlock bits, double lb, double ub);

// 1 + round(DV (size - 1) / (2^len - 1)).
std::size_t decode_index(BitBlock bits, std::size_t table_size);

unsigned default_index_bits(std::size_t table_size);

// Block layout V_s | f_s | V_r | f_r | table index.
struct GenomeLayout {
  unsigned real_bits = 15;
  unsigned index_bits = 4;

  std::size_t length() const noexcept { return 4 * std::size_t{real_bits} + index_bits; }
  BitBlock block(const Genome& g, std::size_t which) const;
};

GenomeLayout make_layout(const GaConfig& config, std::size_t table_size);

Plan decode_genome(const Genome& genome, const GenomeLayout& layout, const PairTable& table, const Model& model);

struct Individual {
  Genome genome;
  Plan plan;
  double cost = 0.0;      // unit cost, $/piece
  double violation = 0.0; // CV

  bool feasible() const noexcept { return violation == 0.0; }
};

using Population = std::vector<Individual>;

// Feasibility dominance: feasible beats infeasible; otherwise lower cost
// (both feasible) or lower CV (both infeasible). Ties go to `a`.
bool wins_tournament(const Individual& a, const Individual& b) noexcept;

// Strict "a ranks before b" under the same rule.
bool ranks_before(const Individual& a, const Individual& b) noexcept;

// Two midway-split passes of binary tournaments; the second runs on a
// shuffled copy. Returns N winners.
Population tournament_select(const Population& population, Rng& rng);

// Exchanges bits [first, last) between the genomes.
void two_point_swap(Genome& a, Genome& b, std::size_t first, std::size_t last);

std::pair<Genome, Genome> two_point_crossover(const Genome& a, const Genome& b, double p_c, Rng& rng);

void mutate(Genome& genome, double p_m, Rng& rng);

enum class ReplacementCase { more_feasible, fewer_feasible, exactly_feasible };

// Best N of original + offspring (N each).
Population elitist_replace(const Population& original, const Population& offspring,
                           ReplacementCase* which = nullptr);

struct GenerationStats {
  std::size_t generation = 0;
  double best_cost = 0.0;
  double mean_cost = 0.0;
  double best_violation = 0.0;
  double gap = 0.0; // (mean - best) / best
};

struct RunResult {
  Individual best;
  std::vector<GenerationStats> history; // generation 0 is the initial population
  std::optional<std::size_t> converged_generation;
  std::size_t evaluations = 0;
  std::uint64_t seed = 0;
};

// Binary-coded elitist GA over one lookup table. Single-owner: one run at
// a time per engine.
class GaEngine {
public:
  GaEngine(const Model& model, PairTable table, GaConfig config);

  const GenomeLayout& layout() const noexcept { return layout_; }
  const PairTable& table() const noexcept { return table_; }
  const GaConfig& config() const noexcept { return config_; }

  Individual evaluate(Genome genome) const;
  Population initialize(Rng& rng) const;
  RunResult run() const;

private:
  const Model& model_;
  PairTable table_;
  GaConfig config_;
  GenomeLayout layout_;
};

RunResult run(const Model& model, double total_depth, const GaConfig& config);

GenerationStats population_stats(const Population& population, std::size_t generation);

} // namespace facemill
