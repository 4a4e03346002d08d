#include "loadsched/ga.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>

#include "loadsched/metrics.hpp"
#include "loadsched/pv.hpp"

namespace loadsched {

Schedule random_schedule(int appliance_count, Rng& rng) {
  Schedule schedule(appliance_count);
  for (auto& bit : schedule.bits()) {
    bit = rng.next_bool() ? 1 : 0;
  }
  return schedule;
}

std::vector<Chromosome> init_population(const ScenarioConfig& config,
                                        Rng& rng) {
  const int n = static_cast<int>(config.appliances.size());
  std::vector<Chromosome> population;
  population.reserve(config.ga.population_size);
  // Deterministic anchor so the search never starts worse than "run
  // everything as early as possible".
  population.push_back({earliest_placement(config), std::nullopt});
  while (static_cast<int>(population.size()) < config.ga.population_size) {
    population.push_back(
        {repair(random_schedule(n, rng), config, rng), std::nullopt});
  }
  return population;
}

double fitness(const Schedule& schedule, const ScenarioConfig& config) {
  const LoadProfile load = hourly_load(schedule, config.appliances);
  double cost;
  if (config.pv) {
    cost = cost_of_profile(dispatch(load, *config.pv).grid_draw, config.price);
  } else {
    cost = cost_of_profile(load, config.price);
  }
  return cost + demand_penalty(load, config);
}

const Chromosome& tournament_select(std::span<const Chromosome> population,
                                    int k, Rng& rng) {
  const int m = static_cast<int>(population.size());
  if (k < 1 || k > m) {
    throw std::invalid_argument("tournament size out of range");
  }
  // Partial Fisher-Yates: the first k entries are distinct uniform draws,
  // in draw order.
  std::vector<int> indices(m);
  std::iota(indices.begin(), indices.end(), 0);
  const Chromosome* best = nullptr;
  for (int i = 0; i < k; ++i) {
    const int j =
        i + static_cast<int>(rng.next_below(static_cast<std::uint64_t>(m - i)));
    std::swap(indices[i], indices[j]);
    const Chromosome& candidate = population[indices[i]];
    if (!candidate.fitness) {
      throw std::logic_error("tournament over an unevaluated population");
    }
    if (best == nullptr || *candidate.fitness < *best->fitness) {
      best = &candidate;
    }
  }
  return *best;
}

std::pair<Chromosome, Chromosome> one_point_crossover(const Chromosome& a,
                                                      const Chromosome& b,
                                                      double rate, Rng& rng) {
  if (a.genome().size() != b.genome().size()) {
    throw std::invalid_argument("crossover requires equal genome lengths");
  }
  Chromosome first{a.schedule, std::nullopt};
  Chromosome second{b.schedule, std::nullopt};
  const std::size_t length = first.genome().size();
  if (rng.bernoulli(rate) && length >= 2) {
    const std::size_t cut = 1 + rng.next_below(length - 1);
    auto bits_first = first.schedule.bits();
    auto bits_second = second.schedule.bits();
    for (std::size_t i = cut; i < length; ++i) {
      std::swap(bits_first[i], bits_second[i]);
    }
  }
  return {std::move(first), std::move(second)};
}

Chromosome binary_mutation(const Chromosome& chromosome, double rate,
                           Rng& rng) {
  Chromosome mutated{chromosome.schedule, std::nullopt};
  for (auto& bit : mutated.schedule.bits()) {
    if (rng.bernoulli(rate)) bit ^= 1;
  }
  return mutated;
}

namespace {

std::size_t best_index(const std::vector<Chromosome>& population) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < population.size(); ++i) {
    if (*population[i].fitness < *population[best].fitness) best = i;
  }
  return best;
}

}  // namespace

GaRun evolve(const ScenarioConfig& config) {
  const GaParams& params = config.ga;
  const double mutation_rate = params.resolved_mutation_rate(
      static_cast<int>(config.appliances.size()));
  Rng rng(params.seed);

  // Repair funnels many genomes onto the same schedule; memoize by genome.
  std::unordered_map<std::string, double> cache;
  auto evaluate = [&cache, &config](Chromosome& c) {
    if (c.fitness) return;
    std::string key(reinterpret_cast<const char*>(c.genome().data()),
                    c.genome().size());
    auto it = cache.find(key);
    if (it == cache.end()) {
      it = cache.emplace(std::move(key), fitness(c.schedule, config)).first;
    }
    c.fitness = it->second;
  };

  std::vector<Chromosome> population = init_population(config, rng);
  for (Chromosome& c : population) evaluate(c);

  GaRun run;
  {
    const std::size_t best = best_index(population);
    run.best_schedule = population[best].schedule;
    run.best_fitness = *population[best].fitness;
  }
  run.fitness_history.push_back(run.best_fitness);
  run.terminated_by = Termination::MaxGenerations;

  int stagnant_generations = 0;
  for (int generation = 1; generation <= params.max_generations;
       ++generation) {
    std::vector<Chromosome> next;
    next.reserve(params.population_size);
    next.push_back(population[best_index(population)]);  // elite, unchanged

    while (static_cast<int>(next.size()) < params.population_size) {
      const Chromosome& parent_a =
          tournament_select(population, params.tournament_size, rng);
      const Chromosome& parent_b =
          tournament_select(population, params.tournament_size, rng);
      auto [child_a, child_b] =
          one_point_crossover(parent_a, parent_b, params.crossover_rate, rng);
      child_a = binary_mutation(child_a, mutation_rate, rng);
      child_b = binary_mutation(child_b, mutation_rate, rng);
      child_a.schedule = repair(child_a.schedule, config, rng);
      child_b.schedule = repair(child_b.schedule, config, rng);
      next.push_back(std::move(child_a));
      if (static_cast<int>(next.size()) < params.population_size) {
        next.push_back(std::move(child_b));
      }
    }

    population = std::move(next);
    for (Chromosome& c : population) evaluate(c);

    const std::size_t best = best_index(population);
    const double generation_best = *population[best].fitness;
    const bool improved =
        generation_best <
        run.best_fitness - 1e-12 * std::abs(run.best_fitness);
    if (improved) {
      run.best_fitness = generation_best;
      run.best_schedule = population[best].schedule;
      stagnant_generations = 0;
    } else {
      ++stagnant_generations;
    }
    run.fitness_history.push_back(run.best_fitness);
    run.generations_executed = generation;

    if (stagnant_generations >= params.stagnation_window) {
      run.terminated_by = Termination::Stagnation;
      break;
    }
  }

  return run;
}

}  // namespace loadsched
