#include "loadsched/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <sstream>

#include "loadsched/feasibility.hpp"

namespace loadsched {

double PriceSignal::max_rate() const {
  return *std::max_element(rates.begin(), rates.end());
}

double GaParams::resolved_mutation_rate(int appliance_count) const {
  if (mutation_rate) return *mutation_rate;
  return 1.0 / (static_cast<double>(appliance_count) * kSlotsPerDay);
}

namespace {

std::string appliance_field(std::size_t i, const char* name) {
  std::ostringstream out;
  out << "appliances[" << i << "]." << name;
  return out.str();
}

bool in_unit_interval(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace

std::vector<ValidationIssue> validate(const ScenarioConfig& config) {
  std::vector<ValidationIssue> issues;
  auto add = [&issues](std::string field, std::string message) {
    issues.push_back({std::move(field), std::move(message)});
  };

  if (config.appliances.empty()) {
    add("appliances", "at least one appliance is required");
  }

  std::set<std::string> seen_ids;
  for (std::size_t i = 0; i < config.appliances.size(); ++i) {
    const Appliance& a = config.appliances[i];
    if (!seen_ids.insert(a.id).second) {
      add(appliance_field(i, "id"), "duplicate appliance id '" + a.id + "'");
    }
    if (!(a.rating_kwh > 0.0)) {
      add(appliance_field(i, "rating_kwh"), "rating must be > 0");
    }
    const bool calls_ok = a.on_calls >= 1 && a.on_calls <= kSlotsPerDay;
    if (!calls_ok) {
      add(appliance_field(i, "on_calls"), "on_calls must be in [1, 24]");
    }
    const bool window_ok = a.earliest_start >= 0 &&
                           a.earliest_start <= a.latest_end &&
                           a.latest_end <= kSlotsPerDay - 1;
    if (!window_ok) {
      add(appliance_field(i, "earliest_start"),
          "window must satisfy 0 <= earliest_start <= latest_end <= 23");
    }
    if (calls_ok && window_ok && a.window_length() < a.on_calls) {
      std::ostringstream msg;
      msg << "window [" << a.earliest_start << ", " << a.latest_end
          << "] cannot hold " << a.on_calls << " ON calls";
      add(appliance_field(i, "on_calls"), msg.str());
    }
  }

  bool any_positive_price = false;
  for (int t = 0; t < kSlotsPerDay; ++t) {
    const double rate = config.price.rates[t];
    if (!(rate >= 0.0)) {
      std::ostringstream field;
      field << "price[" << t << "]";
      add(field.str(), "prices must be >= 0");
    }
    if (rate > 0.0) any_positive_price = true;
  }
  if (!any_positive_price) {
    add("price", "at least one price must be > 0");
  }

  if (config.demand_limit) {
    for (int t = 0; t < kSlotsPerDay; ++t) {
      if (!((*config.demand_limit)[t] > 0.0)) {
        std::ostringstream field;
        field << "demand_limit[" << t << "]";
        add(field.str(), "demand limit entries must be > 0");
      }
    }
    // The fixed NL pattern is mandatory load; a scenario it already breaks
    // can never be scheduled. Only well-formed NL rows contribute here.
    ScenarioConfig necessary_only;
    for (const Appliance& a : config.appliances) {
      if (a.category != ApplianceCategory::Necessary) continue;
      const bool well_formed =
          a.rating_kwh > 0.0 && a.on_calls >= 1 && a.on_calls <= kSlotsPerDay &&
          a.earliest_start >= 0 && a.earliest_start <= a.latest_end &&
          a.latest_end <= kSlotsPerDay - 1 && a.window_length() >= a.on_calls;
      if (well_formed) necessary_only.appliances.push_back(a);
    }
    if (!necessary_only.appliances.empty()) {
      const LoadProfile nl = necessary_load(necessary_only);
      for (int t = 0; t < kSlotsPerDay; ++t) {
        if (nl[t] > (*config.demand_limit)[t]) {
          std::ostringstream field, msg;
          field << "demand_limit[" << t << "]";
          msg << "mandatory NL load " << nl[t] << " exceeds D(t) "
              << (*config.demand_limit)[t];
          add(field.str(), msg.str());
        }
      }
    }
  }

  if (config.pv) {
    const PvProfile& pv = *config.pv;
    if (!(pv.sigma > 0.0)) {
      add("pv.sigma", "sigma must be > 0");
    }
    const bool day_ok = pv.day_start >= 0 && pv.day_start <= pv.day_end &&
                        pv.day_end <= kSlotsPerDay - 1;
    if (!day_ok) {
      add("pv.day_start",
          "daylight window must satisfy 0 <= day_start <= day_end <= 23");
    }
    if (day_ok && !(pv.delta >= pv.day_start && pv.delta <= pv.day_end)) {
      add("pv.delta", "peak hour must lie inside the daylight window");
    }
  }

  const GaParams& ga = config.ga;
  if (ga.population_size < 2) {
    add("ga.population_size", "population_size must be >= 2");
  }
  if (ga.max_generations < 1) {
    add("ga.max_generations", "max_generations must be >= 1");
  }
  if (ga.tournament_size < 1 || ga.tournament_size > ga.population_size) {
    add("ga.tournament_size",
        "tournament_size must be in [1, population_size]");
  }
  if (!in_unit_interval(ga.crossover_rate)) {
    add("ga.crossover_rate", "crossover_rate must be in [0, 1]");
  }
  if (ga.mutation_rate && !in_unit_interval(*ga.mutation_rate)) {
    add("ga.mutation_rate", "mutation_rate must be in [0, 1]");
  }
  if (ga.stagnation_window < 1) {
    add("ga.stagnation_window", "stagnation_window must be >= 1");
  }

  return issues;
}

std::string format_issues(const std::vector<ValidationIssue>& issues) {
  std::ostringstream out;
  for (const ValidationIssue& issue : issues) {
    out << issue.field << ": " << issue.message << "\n";
  }
  return out.str();
}

}  // namespace loadsched
