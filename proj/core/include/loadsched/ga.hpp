#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "loadsched/feasibility.hpp"
#include "loadsched/rng.hpp"
#include "loadsched/schedule.hpp"
#include "loadsched/scenario.hpp"

namespace loadsched {

// One candidate solution. The genome is the schedule's flat row-major bit
// vector; fitness is cached after evaluation and cleared by any operator
// that touches the bits.
struct Chromosome {
  Schedule schedule;
  std::optional<double> fitness;

  std::span<const std::uint8_t> genome() const { return schedule.bits(); }
};

enum class Termination { MaxGenerations, Stagnation };

struct GaRun {
  Schedule best_schedule;
  double best_fitness = 0.0;
  // Best fitness per generation, entry 0 being the initial population.
  // Non-increasing: the best chromosome is carried unchanged.
  std::vector<double> fitness_history;
  int generations_executed = 0;
  Termination terminated_by = Termination::MaxGenerations;
};

// Uniform random bit matrix, each bit an independent fair coin.
Schedule random_schedule(int appliance_count, Rng& rng);

// population_size chromosomes: the deterministic earliest-placement anchor
// plus independently drawn random matrices, all passed through repair.
std::vector<Chromosome> init_population(const ScenarioConfig& config, Rng& rng);

// Billing cost of the grid draw (total cost when no PV) plus the
// demand-limit penalty. Pure; identical inputs give identical outputs.
double fitness(const Schedule& schedule, const ScenarioConfig& config);

// Draws k distinct members uniformly without replacement and returns the
// one with minimal fitness (ties go to the earliest drawn). Every member
// must already carry a fitness.
const Chromosome& tournament_select(std::span<const Chromosome> population,
                                    int k, Rng& rng);

// With probability rate, splices the genomes at a cut point drawn uniformly
// from {1, ..., L-1}; otherwise returns copies of the parents. Children are
// raw splices; the evolve pipeline repairs them after mutation.
std::pair<Chromosome, Chromosome> one_point_crossover(const Chromosome& a,
                                                      const Chromosome& b,
                                                      double rate, Rng& rng);

// Flips each bit independently with the given probability. Raw result; the
// evolve pipeline repairs it.
Chromosome binary_mutation(const Chromosome& chromosome, double rate,
                           Rng& rng);

// Generational loop: evaluate, carry the single best unchanged, refill via
// tournament selection -> one-point crossover -> binary mutation -> repair.
// Stops at max_generations or once the best fitness has not improved
// (relative improvement < 1e-12) for stagnation_window generations.
// Fully deterministic for a given config and seed.
GaRun evolve(const ScenarioConfig& config);

}  // namespace loadsched
