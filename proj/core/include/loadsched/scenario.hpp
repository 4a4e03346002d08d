#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "loadsched/appliance.hpp"
#include "loadsched/time_grid.hpp"

namespace loadsched {

// Per-slot electricity price, currency units per kWh. The currency is
// unitless; whatever scale the scenario file uses defines it.
struct PriceSignal {
  SlotArray rates{};

  double max_rate() const;
};

// Local PV source modelled as a daylight-clamped Gaussian over the day.
struct PvProfile {
  double sigma = 3.0;   // spread, hours
  double delta = 13.0;  // peak hour
  double scale = 10.0;  // output multiplier
  int day_start = 6;    // first daylight slot
  int day_end = 18;     // last daylight slot, inclusive
};

// Search engine knobs. Every field can be set per scenario; the defaults
// here are used for any key the scenario file omits. A missing mutation
// rate resolves to 1/genome-length.
struct GaParams {
  int population_size = 50;
  int max_generations = 500;
  int tournament_size = 3;
  double crossover_rate = 0.9;
  std::optional<double> mutation_rate;
  int stagnation_window = 30;  // generations without improvement before stopping
  std::uint64_t seed = 1;

  double resolved_mutation_rate(int appliance_count) const;
};

// A complete scheduling problem. Appliance order is canonical: it defines
// the row order of every Schedule evaluated against this config.
// All fields are immutable after validation; instances are safe to share
// across concurrent readers.
struct ScenarioConfig {
  std::vector<Appliance> appliances;
  PriceSignal price;
  std::optional<SlotArray> demand_limit;  // D(t), kWh per slot
  std::optional<PvProfile> pv;
  GaParams ga;
};

struct ValidationIssue {
  std::string field;
  std::string message;
};

// Checks every domain invariant and returns one issue per violated
// invariant (empty means the config is valid). Nothing is silently fixed.
std::vector<ValidationIssue> validate(const ScenarioConfig& config);

std::string format_issues(const std::vector<ValidationIssue>& issues);

}  // namespace loadsched
