#include "loadsched/pv.hpp"

#include <cmath>
#include <numbers>

namespace loadsched {

double pv_generation(int slot, const PvProfile& profile) {
  if (slot < profile.day_start || slot > profile.day_end) return 0.0;
  const double z = (static_cast<double>(slot) - profile.delta) / profile.sigma;
  const double norm =
      1.0 / (std::sqrt(2.0 * std::numbers::pi) * profile.sigma);
  return profile.scale * norm * std::exp(-0.5 * z * z);
}

SlotArray generation_profile(const PvProfile& profile) {
  SlotArray out{};
  for (int t = 0; t < kSlotsPerDay; ++t) out[t] = pv_generation(t, profile);
  return out;
}

DispatchResult dispatch(const LoadProfile& load, const PvProfile& pv) {
  DispatchResult result;
  result.pv_generated = generation_profile(pv);
  for (int t = 0; t < kSlotsPerDay; ++t) {
    const double served = std::min(load[t], result.pv_generated[t]);
    result.pv_served[t] = served;
    result.grid_draw[t] = load[t] - served;
    result.surplus[t] = result.pv_generated[t] - served;
  }
  return result;
}

DispatchResult dispatch(const LoadProfile& load,
                        const std::optional<PvProfile>& pv) {
  if (pv) return dispatch(load, *pv);
  DispatchResult result;
  result.grid_draw = load;
  return result;
}

double grid_cost_after_pv(const Schedule& schedule,
                          std::span<const Appliance> appliances,
                          const PriceSignal& price,
                          const std::optional<PvProfile>& pv) {
  const LoadProfile load = hourly_load(schedule, appliances);
  if (!pv) return cost_of_profile(load, price);
  return cost_of_profile(dispatch(load, *pv).grid_draw, price);
}

std::vector<int> saturated_slots(const DispatchResult& result) {
  std::vector<int> slots;
  for (int t = 0; t < kSlotsPerDay; ++t) {
    if (result.pv_generated[t] > 0.0 && result.surplus[t] <= 0.0) {
      slots.push_back(t);
    }
  }
  return slots;
}

}  // namespace loadsched
