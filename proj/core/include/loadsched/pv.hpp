#pragma once

#include <optional>
#include <span>
#include <vector>

#include "loadsched/metrics.hpp"
#include "loadsched/scenario.hpp"

namespace loadsched {

// PV output at an integer hour: scale * Gaussian(slot; delta, sigma) inside
// [day_start, day_end], hard zero outside (panels produce nothing at night).
double pv_generation(int slot, const PvProfile& profile);

SlotArray generation_profile(const PvProfile& profile);

// Two-stage dispatch outcome for one day. Invariants, per slot:
//   pv_served + surplus   == pv_generated
//   pv_served + grid_draw == load
struct DispatchResult {
  SlotArray pv_generated{};
  SlotArray pv_served{};
  SlotArray grid_draw{};
  SlotArray surplus{};
};

// Greedy per-slot dispatch: PV serves load first, the grid covers the
// remainder, leftover generation is surplus (no battery, no export).
DispatchResult dispatch(const LoadProfile& load, const PvProfile& pv);

// Degenerate dispatch when no PV source exists: everything from the grid.
DispatchResult dispatch(const LoadProfile& load,
                        const std::optional<PvProfile>& pv);

// Billing cost of the grid-supplied remainder. With pv absent this equals
// total_cost exactly (identical arithmetic path).
double grid_cost_after_pv(const Schedule& schedule,
                          std::span<const Appliance> appliances,
                          const PriceSignal& price,
                          const std::optional<PvProfile>& pv);

// Slots where generation was fully consumed while load remained, i.e. the
// strict-surplus condition fails. Reported, never forbidden.
std::vector<int> saturated_slots(const DispatchResult& result);

}  // namespace loadsched
