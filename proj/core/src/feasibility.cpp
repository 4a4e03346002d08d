#include "loadsched/feasibility.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace loadsched {

const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::DemandLimit:
      return "DemandLimit";
    case ViolationKind::OnCallCount:
      return "OnCallCount";
    case ViolationKind::WindowBound:
      return "WindowBound";
    case ViolationKind::ContiguityCL:
      return "ContiguityCL";
    case ViolationKind::FixedNL:
      return "FixedNL";
  }
  return "?";
}

namespace {

void require_matching(const Schedule& schedule, const ScenarioConfig& config) {
  if (schedule.appliance_count() !=
      static_cast<int>(config.appliances.size())) {
    throw std::invalid_argument(
        "schedule row count does not match the appliance list");
  }
}

void write_block(Schedule& schedule, int appliance, int start, int length) {
  for (int t = 0; t < kSlotsPerDay; ++t) schedule.set(appliance, t, false);
  for (int t = start; t < start + length; ++t) schedule.set(appliance, t, true);
}

bool is_fixed_pattern(const Schedule& schedule, int appliance,
                      const Appliance& spec) {
  for (int t = 0; t < kSlotsPerDay; ++t) {
    const bool expected =
        t >= spec.earliest_start && t < spec.earliest_start + spec.on_calls;
    if (schedule.on(appliance, t) != expected) return false;
  }
  return true;
}

int count_blocks(const Schedule& schedule, int appliance) {
  int blocks = 0;
  bool prev = false;
  for (int t = 0; t < kSlotsPerDay; ++t) {
    const bool cur = schedule.on(appliance, t);
    if (cur && !prev) ++blocks;
    prev = cur;
  }
  return blocks;
}

}  // namespace

std::vector<Violation> check_feasibility(const Schedule& schedule,
                                         const ScenarioConfig& config) {
  require_matching(schedule, config);
  std::vector<Violation> violations;

  if (config.demand_limit) {
    const LoadProfile load = hourly_load(schedule, config.appliances);
    for (int t = 0; t < kSlotsPerDay; ++t) {
      if (load[t] > (*config.demand_limit)[t]) {
        std::ostringstream detail;
        detail << "load " << load[t] << " kWh exceeds limit "
               << (*config.demand_limit)[t] << " kWh";
        violations.push_back(
            {ViolationKind::DemandLimit, std::nullopt, t, detail.str()});
      }
    }
  }

  for (std::size_t i = 0; i < config.appliances.size(); ++i) {
    const Appliance& a = config.appliances[i];
    const int row = static_cast<int>(i);

    const int count = schedule.on_count(row);
    if (count != a.on_calls) {
      std::ostringstream detail;
      detail << count << " ON slots, duty cycle requires " << a.on_calls;
      violations.push_back(
          {ViolationKind::OnCallCount, a.id, std::nullopt, detail.str()});
    }

    std::vector<int> outside;
    for (int t = 0; t < kSlotsPerDay; ++t) {
      if (schedule.on(row, t) && (t < a.earliest_start || t > a.latest_end)) {
        outside.push_back(t);
      }
    }
    if (!outside.empty()) {
      std::ostringstream detail;
      detail << "ON outside window [" << a.earliest_start << ", "
             << a.latest_end << "] at slot";
      for (int t : outside) detail << " " << t;
      violations.push_back(
          {ViolationKind::WindowBound, a.id, std::nullopt, detail.str()});
    }

    if (a.category == ApplianceCategory::Consistent &&
        count_blocks(schedule, row) > 1) {
      violations.push_back({ViolationKind::ContiguityCL, a.id, std::nullopt,
                            "duty cycle split into multiple blocks"});
    }

    if (a.category == ApplianceCategory::Necessary &&
        !is_fixed_pattern(schedule, row, a)) {
      violations.push_back({ViolationKind::FixedNL, a.id, std::nullopt,
                            "necessary load deviates from its fixed pattern"});
    }
  }

  return violations;
}

Schedule repair(const Schedule& schedule, const ScenarioConfig& config,
                Rng& /*rng*/) {
  require_matching(schedule, config);
  Schedule out = schedule;

  for (std::size_t i = 0; i < config.appliances.size(); ++i) {
    const Appliance& a = config.appliances[i];
    const int row = static_cast<int>(i);

    switch (a.category) {
      case ApplianceCategory::Necessary:
        write_block(out, row, a.earliest_start, a.on_calls);
        break;

      case ApplianceCategory::Consistent: {
        // Re-centre the duty-cycle block on the raw row's centre of mass.
        double mass = 0.0;
        int on_bits = 0;
        for (int t = 0; t < kSlotsPerDay; ++t) {
          if (schedule.on(row, t)) {
            mass += t;
            ++on_bits;
          }
        }
        const double centre =
            on_bits > 0 ? mass / on_bits
                        : (a.earliest_start + a.latest_end) / 2.0;
        const int first_start = a.earliest_start;
        const int last_start = a.latest_end - a.on_calls + 1;
        int best_start = first_start;
        double best_distance =
            std::abs(first_start + (a.on_calls - 1) / 2.0 - centre);
        for (int s = first_start + 1; s <= last_start; ++s) {
          const double d = std::abs(s + (a.on_calls - 1) / 2.0 - centre);
          if (d < best_distance) {
            best_distance = d;
            best_start = s;
          }
        }
        write_block(out, row, best_start, a.on_calls);
        break;
      }

      case ApplianceCategory::Inconsistent: {
        std::vector<int> on;
        std::vector<int> off;
        for (int t = a.earliest_start; t <= a.latest_end; ++t) {
          (schedule.on(row, t) ? on : off).push_back(t);
        }
        const auto& rates = config.price.rates;
        if (static_cast<int>(on.size()) > a.on_calls) {
          // Drop the priciest bits; equal prices drop the earlier slot.
          std::stable_sort(on.begin(), on.end(), [&rates](int lhs, int rhs) {
            if (rates[lhs] != rates[rhs]) return rates[lhs] > rates[rhs];
            return lhs < rhs;
          });
          on.erase(on.begin(), on.begin() + (on.size() - a.on_calls));
        } else if (static_cast<int>(on.size()) < a.on_calls) {
          // Fill with the cheapest free slots; equal prices take the earlier.
          std::stable_sort(off.begin(), off.end(), [&rates](int lhs, int rhs) {
            if (rates[lhs] != rates[rhs]) return rates[lhs] < rates[rhs];
            return lhs < rhs;
          });
          on.insert(on.end(), off.begin(),
                    off.begin() + (a.on_calls - on.size()));
        }
        for (int t = 0; t < kSlotsPerDay; ++t) out.set(row, t, false);
        for (int t : on) out.set(row, t, true);
        break;
      }
    }
  }

  return out;
}

Schedule earliest_placement(const ScenarioConfig& config) {
  Schedule schedule(static_cast<int>(config.appliances.size()));
  for (std::size_t i = 0; i < config.appliances.size(); ++i) {
    const Appliance& a = config.appliances[i];
    write_block(schedule, static_cast<int>(i), a.earliest_start, a.on_calls);
  }
  return schedule;
}

LoadProfile necessary_load(const ScenarioConfig& config) {
  LoadProfile load{};
  for (const Appliance& a : config.appliances) {
    if (a.category != ApplianceCategory::Necessary) continue;
    for (int t = a.earliest_start; t < a.earliest_start + a.on_calls; ++t) {
      load[t] += a.rating_kwh;
    }
  }
  return load;
}

double demand_penalty_weight(const PriceSignal& price) {
  return 1000.0 * price.max_rate();
}

double demand_penalty(const LoadProfile& load, const ScenarioConfig& config) {
  if (!config.demand_limit) return 0.0;
  double excess = 0.0;
  for (int t = 0; t < kSlotsPerDay; ++t) {
    excess += std::max(0.0, load[t] - (*config.demand_limit)[t]);
  }
  return demand_penalty_weight(config.price) * excess;
}

}  // namespace loadsched
