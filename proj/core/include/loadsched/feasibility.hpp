#pragma once

#include <optional>
#include <string>
#include <vector>

#include "loadsched/metrics.hpp"
#include "loadsched/rng.hpp"
#include "loadsched/schedule.hpp"
#include "loadsched/scenario.hpp"

namespace loadsched {

enum class ViolationKind {
  DemandLimit,   // aggregate load exceeds D(t) in some slot
  OnCallCount,   // appliance ON count differs from its duty cycle
  WindowBound,   // ON slot outside [earliest_start, latest_end]
  ContiguityCL,  // consistent load split into more than one block
  FixedNL,       // necessary load deviates from its fixed pattern
};

const char* to_string(ViolationKind kind);

// DemandLimit violations carry the slot; all other kinds carry the
// appliance id.
struct Violation {
  ViolationKind kind;
  std::optional<std::string> appliance_id;
  std::optional<int> slot;
  std::string detail;
};

// Exhaustive constraint check; an empty result means feasible.
std::vector<Violation> check_feasibility(const Schedule& schedule,
                                         const ScenarioConfig& config);

// Deterministic projection of an arbitrary bit matrix onto the structurally
// feasible set:
//   NL  -> the fixed pattern (ON for on_calls slots from earliest_start),
//          regardless of input;
//   CL  -> one contiguous on_calls block whose start is the feasible start
//          nearest the raw row's centre of mass (ties toward the earlier
//          slot; an all-OFF row uses the window midpoint);
//   ICL -> in-window bits only, then trim the priciest ON slots or add the
//          cheapest OFF slots until the count matches on_calls (price ties
//          select the lower slot index).
// Demand-limit violations are left alone; the fitness penalty handles them.
// Idempotent bit-for-bit. The random source is part of the repair contract
// for callers that thread one through a seeded pipeline; the current rules
// never draw from it.
Schedule repair(const Schedule& schedule, const ScenarioConfig& config,
                Rng& rng);

// Every appliance ON from its earliest_start for on_calls slots. This is
// both the "run when you want" baseline and the search anchor.
Schedule earliest_placement(const ScenarioConfig& config);

// Fixed contribution of the necessary loads, used when validating D(t).
LoadProfile necessary_load(const ScenarioConfig& config);

// Penalty weight: 1000 x the highest price, large enough that any
// demand-limit excess outweighs any achievable billing cost.
double demand_penalty_weight(const PriceSignal& price);

// weight * sum_t max(0, load[t] - D(t)); zero when no demand limit is set.
double demand_penalty(const LoadProfile& load, const ScenarioConfig& config);

}  // namespace loadsched
