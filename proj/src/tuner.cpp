#include "evosort/tuner.hpp"

#include <iomanip>
#include <stdexcept>

namespace evosort {

void check_ga_config(const GaConfig& config) {
  if (config.population_size < 2) {
    throw std::invalid_argument("population_size must be >= 2");
  }
  if (config.elite_count >= config.population_size) {
    throw std::invalid_argument("elite_count must be < population_size");
  }
  if (config.recombination_probability < 0.0 || config.recombination_probability > 1.0 ||
      config.mutation_probability < 0.0 || config.mutation_probability > 1.0) {
    throw std::invalid_argument("operator probabilities must lie in [0, 1]");
  }
  if (config.tournament_size < 1) {
    throw std::invalid_argument("tournament_size must be >= 1");
  }
}

std::vector<Individual> init_population(const GeneBounds& bounds,
                                        const GaConfig& config, Xoshiro256& rng) {
  std::vector<Individual> population(config.population_size);
  for (auto& ind : population) {
    for (int g = 0; g < kGeneCount; ++g) {
      const GeneRange range = gene_range(bounds, g);
      gene_set(ind.genes, g, rng.uniform_int(range.min, range.max));
    }
  }
  return population;
}

namespace {

// Winner = lowest recorded fitness; ties break toward the lower index so the
// outcome never depends on timing jitter beyond the recorded values.
std::size_t tournament(const std::vector<Individual>& population,
                       std::size_t tournament_size, Xoshiro256& rng) {
  std::size_t winner = rng.bounded(population.size());
  for (std::size_t t = 1; t < tournament_size; ++t) {
    const std::size_t challenger = rng.bounded(population.size());
    if (*population[challenger].fitness < *population[winner].fitness ||
        (*population[challenger].fitness == *population[winner].fitness &&
         challenger < winner)) {
      winner = challenger;
    }
  }
  return winner;
}

}  // namespace

std::vector<Individual> evolve(const std::vector<Individual>& population,
                               const GeneBounds& bounds, const GaConfig& config,
                               Xoshiro256& rng) {
  std::vector<std::size_t> order(population.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return *population[a].fitness < *population[b].fitness;
  });

  std::vector<Individual> next;
  next.reserve(population.size());
  for (std::size_t e = 0; e < config.elite_count; ++e) {
    next.push_back(population[order[e]]);  // fitness kept, not re-timed
  }

  while (next.size() < population.size()) {
    const Individual& p1 = population[tournament(population, config.tournament_size, rng)];
    const Individual& p2 = population[tournament(population, config.tournament_size, rng)];
    Individual child;
    if (rng.coin(config.recombination_probability)) {
      for (int g = 0; g < kGeneCount; ++g) {
        gene_set(child.genes, g,
                 gene_get(rng.coin(0.5) ? p2.genes : p1.genes, g));
      }
    } else {
      child.genes = p1.genes;
    }
    for (int g = 0; g < kGeneCount; ++g) {
      if (rng.coin(config.mutation_probability)) {
        const GeneRange range = gene_range(bounds, g);
        gene_set(child.genes, g, rng.uniform_int(range.min, range.max));
      }
    }
    next.push_back(std::move(child));
  }
  return next;
}

void write_trace_csv(std::ostream& out, const std::vector<GenerationStats>& trace) {
  out << "generation,best_time_s,worst_time_s,avg_time_s,best_genes\n";
  for (const auto& stats : trace) {
    out << stats.generation << ',' << std::setprecision(9) << stats.best_time_s
        << ',' << stats.worst_time_s << ',' << stats.average_time_s << ",\""
        << to_list_string(stats.best_genes) << "\"\n";
  }
}

}  // namespace evosort
