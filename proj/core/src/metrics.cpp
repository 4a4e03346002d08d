#include "loadsched/metrics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace loadsched {

namespace {

void require_matching(const Schedule& schedule,
                      std::span<const Appliance> appliances) {
  if (schedule.appliance_count() !=
      static_cast<int>(appliances.size())) {
    std::ostringstream msg;
    msg << "schedule has " << schedule.appliance_count()
        << " rows but the appliance list has " << appliances.size();
    throw std::invalid_argument(msg.str());
  }
}

}  // namespace

LoadProfile hourly_load(const Schedule& schedule,
                        std::span<const Appliance> appliances) {
  require_matching(schedule, appliances);
  LoadProfile load{};
  for (int t = 0; t < kSlotsPerDay; ++t) {
    double sum = 0.0;
    for (std::size_t a = 0; a < appliances.size(); ++a) {
      if (schedule.on(static_cast<int>(a), t)) {
        sum += appliances[a].rating_kwh;
      }
    }
    load[t] = sum;
  }
  return load;
}

double total_energy(const Schedule& schedule,
                    std::span<const Appliance> appliances) {
  const LoadProfile load = hourly_load(schedule, appliances);
  double total = 0.0;
  for (int t = 0; t < kSlotsPerDay; ++t) total += load[t];
  return total;
}

double cost_of_profile(const LoadProfile& load, const PriceSignal& price) {
  double total = 0.0;
  for (int t = 0; t < kSlotsPerDay; ++t) total += load[t] * price.rates[t];
  return total;
}

double total_cost(const Schedule& schedule,
                  std::span<const Appliance> appliances,
                  const PriceSignal& price) {
  return cost_of_profile(hourly_load(schedule, appliances), price);
}

double par(const LoadProfile& profile) {
  double peak = 0.0;
  double sum = 0.0;
  for (int t = 0; t < kSlotsPerDay; ++t) {
    peak = std::max(peak, profile[t]);
    sum += profile[t];
  }
  if (sum <= 0.0) {
    throw std::domain_error(
        "PAR is undefined for an all-zero load profile (zero average)");
  }
  return peak / (sum / kSlotsPerDay);
}

}  // namespace loadsched
