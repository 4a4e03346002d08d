#pragma once

#include <span>

#include "loadsched/appliance.hpp"
#include "loadsched/schedule.hpp"
#include "loadsched/scenario.hpp"
#include "loadsched/time_grid.hpp"

namespace loadsched {

// All functions here are pure; the search engine evaluates them
// concurrently without synchronization.

// Aggregate consumption per slot: load[t] = sum_a bit[a][t] * rating_a,
// summed in appliance order. Throws std::invalid_argument on a row-count
// mismatch.
LoadProfile hourly_load(const Schedule& schedule,
                        std::span<const Appliance> appliances);

// Total utilized energy for the day. Defined as the sum of the hourly_load
// entries, in slot order, so the two agree bit-for-bit.
double total_energy(const Schedule& schedule,
                    std::span<const Appliance> appliances);

// Billing cost: sum_t load[t] * rate[t].
double total_cost(const Schedule& schedule,
                  std::span<const Appliance> appliances,
                  const PriceSignal& price);

double cost_of_profile(const LoadProfile& load, const PriceSignal& price);

// Peak-to-average ratio of a profile; always in [1, 24] for a nonzero
// profile. Throws std::domain_error on an all-zero profile (the ratio is
// undefined, never silently clamped).
double par(const LoadProfile& profile);

}  // namespace loadsched
