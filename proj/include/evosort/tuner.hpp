#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <ostream>
#include <vector>

#include "evosort/dataset.hpp"
#include "evosort/dispatch.hpp"
#include "evosort/params.hpp"
#include "evosort/pool.hpp"
#include "evosort/rng.hpp"

namespace evosort {

struct Individual {
  TuningParams genes;
  std::optional<double> fitness;  // wall-clock seconds, set after evaluation
};

struct GaConfig {
  std::size_t population_size = 30;
  std::size_t generations = 10;
  double recombination_probability = 0.7;
  double mutation_probability = 0.3;
  std::size_t elite_count = 1;
  std::size_t tournament_size = 2;
  std::size_t evaluation_repeats = 1;
  std::uint64_t rng_seed = 0;
  // Desk-scale override: the evaluation sample is sample_fraction * n
  // elements. 1.0 reproduces the full-size tuning loop.
  double sample_fraction = 1.0;
};

struct GenerationStats {
  std::size_t generation;
  double best_time_s;
  double worst_time_s;
  double average_time_s;
  TuningParams best_genes;
};

struct TuningOutcome {
  TuningParams best;
  std::vector<GenerationStats> trace;
};

inline constexpr double kMinFitness = 1e-12;

void check_ga_config(const GaConfig& config);

std::vector<Individual> init_population(const GeneBounds& bounds,
                                        const GaConfig& config, Xoshiro256& rng);

// Elitism, then tournament selection + uniform crossover + uniform mutation.
// Consumes RNG draws independently of fitness magnitudes, so the gene
// sequence is deterministic given the seed even though timings are not.
std::vector<Individual> evolve(const std::vector<Individual>& population,
                               const GeneBounds& bounds, const GaConfig& config,
                               Xoshiro256& rng);

// CSV trace, header "generation,best_time_s,worst_time_s,avg_time_s,best_genes".
void write_trace_csv(std::ostream& out, const std::vector<GenerationStats>& trace);

// ---------------------------------------------------------------------------

// Fitness = min wall-clock time over `repeats` sorts of a fresh copy of the
// sample. The sorted output is checked against the reference each run; a
// mismatch throws, aborting the tuning run.
template <typename T>
double evaluate_fitness(const TuningParams& genes, const std::vector<T>& sample,
                        const std::vector<T>& reference, SortBuffer<T>& work,
                        WorkerPool& pool, std::size_t repeats) {
  double best = std::numeric_limits<double>::infinity();
  if (repeats < 1) repeats = 1;
  for (std::size_t r = 0; r < repeats; ++r) {
    work.primary = sample;
    work.scratch.resize(sample.size());
    const auto start = std::chrono::steady_clock::now();
    adaptive_partition_sort(work, genes, pool);
    const auto stop = std::chrono::steady_clock::now();
    if (work.primary != reference) {
      throw std::runtime_error(
          "GA fitness evaluation produced an incorrectly sorted array for genes " +
          to_list_string(genes));
    }
    best = std::min(best, std::chrono::duration<double>(stop - start).count());
  }
  return std::max(best, kMinFitness);
}

template <typename T>
GenerationStats summarize_generation(std::size_t generation,
                                     const std::vector<Individual>& population) {
  GenerationStats stats{generation, std::numeric_limits<double>::infinity(), 0.0,
                        0.0, population.front().genes};
  double sum = 0.0;
  for (const auto& ind : population) {
    const double f = *ind.fitness;
    sum += f;
    if (f < stats.best_time_s) {
      stats.best_time_s = f;
      stats.best_genes = ind.genes;
    }
    stats.worst_time_s = std::max(stats.worst_time_s, f);
  }
  stats.average_time_s = sum / static_cast<double>(population.size());
  return stats;
}

// The GA driver: seeded sample generation, sequential fitness evaluation
// (concurrent evaluations would corrupt the wall-clock measurements), and
// generational evolution. Returns the overall best genes and the trace.
template <typename T>
TuningOutcome run_ga_tuning(std::size_t n, const GeneBounds& bounds,
                            const GaConfig& config, WorkerPool& pool) {
  check_ga_config(config);

  const auto sample_size = static_cast<std::size_t>(
      static_cast<double>(n) * std::clamp(config.sample_fraction, 0.0, 1.0));
  DatasetSpec spec;
  spec.n = sample_size;
  spec.element_width = static_cast<int>(sizeof(T) * 8);
  spec.seed = Xoshiro256::derive_seed(config.rng_seed, 1);
  const std::vector<T> sample = generate_dataset<T>(spec);
  std::vector<T> reference = sample;
  std::sort(reference.begin(), reference.end());

  Xoshiro256 gene_rng(Xoshiro256::derive_seed(config.rng_seed, 2));
  std::vector<Individual> population = init_population(bounds, config, gene_rng);

  SortBuffer<T> work(sample.size());
  TuningOutcome outcome;
  double best_overall = std::numeric_limits<double>::infinity();

  for (std::size_t g = 0; g < config.generations; ++g) {
    for (auto& ind : population) {
      if (!ind.fitness) {
        ind.fitness = evaluate_fitness(ind.genes, sample, reference, work, pool,
                                       config.evaluation_repeats);
      }
    }
    const GenerationStats stats = summarize_generation<T>(g, population);
    outcome.trace.push_back(stats);
    if (stats.best_time_s < best_overall) {
      best_overall = stats.best_time_s;
      outcome.best = stats.best_genes;
    }
    if (g + 1 < config.generations) {
      population = evolve(population, bounds, config, gene_rng);
    }
  }
  return outcome;
}

}  // namespace evosort
