#include "loadsched/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "loadsched/feasibility.hpp"
#include "loadsched/metrics.hpp"
#include "loadsched/oracle.hpp"

namespace loadsched {

namespace {

using ordered_json = nlohmann::ordered_json;

CaseResult evaluate_case(Schedule schedule, const ScenarioConfig& config) {
  CaseResult result;
  result.load = hourly_load(schedule, config.appliances);
  result.dispatch = dispatch(result.load, config.pv);
  result.energy_total = total_energy(schedule, config.appliances);
  result.grid_cost = cost_of_profile(result.dispatch.grid_draw, config.price);
  result.peak_grid = *std::max_element(result.dispatch.grid_draw.begin(),
                                       result.dispatch.grid_draw.end());
  result.par = par(result.dispatch.grid_draw);
  result.schedule = std::move(schedule);
  return result;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << text;
}

std::string csv_number(double v) {
  std::ostringstream out;
  out << std::setprecision(12) << v;
  return out.str();
}

}  // namespace

RunResult run_scenario(const ScenarioConfig& config) {
  RunResult result;
  result.config = config;
  result.unscheduled = evaluate_case(earliest_placement(config), config);
  result.ga = evolve(config);
  result.scheduled = evaluate_case(result.ga.best_schedule, config);

  ScenarioComparison& c = result.comparison;
  c.E_us_total = result.unscheduled.energy_total;
  c.E_s_total = result.scheduled.energy_total;
  c.u_us = result.unscheduled.peak_grid;
  c.u_s = result.scheduled.peak_grid;
  c.cost_us = result.unscheduled.grid_cost;
  c.cost_s = result.scheduled.grid_cost;
  c.par_us = result.unscheduled.par;
  c.par_s = result.scheduled.par;
  c.bill_reduction_pct =
      c.cost_us > 0.0 ? 100.0 * (c.cost_us - c.cost_s) / c.cost_us : 0.0;
  c.par_reduction_pct =
      c.par_us > 0.0 ? 100.0 * (c.par_us - c.par_s) / c.par_us : 0.0;
  c.eq11_holds = c.u_s < c.u_us;
  c.eq12_holds =
      std::abs(c.E_s_total - c.E_us_total) <= 1e-9 * c.E_us_total;

  // Repair pins every duty cycle, so total energy cannot drift between the
  // two cases. Check it anyway rather than trusting the construction.
  if (!c.eq12_holds) {
    throw std::logic_error("utilized energy differs between cases");
  }
  return result;
}

std::string summary_json(const ScenarioComparison& c) {
  ordered_json doc;
  doc["E_us_total"] = c.E_us_total;
  doc["E_s_total"] = c.E_s_total;
  doc["u_us"] = c.u_us;
  doc["u_s"] = c.u_s;
  doc["cost_us"] = c.cost_us;
  doc["cost_s"] = c.cost_s;
  doc["par_us"] = c.par_us;
  doc["par_s"] = c.par_s;
  doc["bill_reduction_pct"] = c.bill_reduction_pct;
  doc["par_reduction_pct"] = c.par_reduction_pct;
  doc["eq11_holds"] = c.eq11_holds;
  doc["eq12_holds"] = c.eq12_holds;
  return doc.dump(2) + "\n";
}

void emit_plot_data(const RunResult& result,
                    const std::filesystem::path& dir) {
  std::filesystem::create_directories(dir);
  const ScenarioConfig& config = result.config;

  {
    std::ostringstream csv;
    csv << "hour,price\n";
    for (int t = 0; t < kSlotsPerDay; ++t) {
      csv << t << "," << csv_number(config.price.rates[t]) << "\n";
    }
    write_file(dir / "price.csv", csv.str());
  }
  {
    std::ostringstream csv;
    csv << "hour,pv_kwh\n";
    for (int t = 0; t < kSlotsPerDay; ++t) {
      csv << t << "," << csv_number(result.scheduled.dispatch.pv_generated[t])
          << "\n";
    }
    write_file(dir / "pv_generation.csv", csv.str());
  }
  {
    std::ostringstream csv;
    csv << "hour,unscheduled_kwh,scheduled_kwh,unscheduled_grid_kwh,"
           "scheduled_grid_kwh\n";
    for (int t = 0; t < kSlotsPerDay; ++t) {
      csv << t << "," << csv_number(result.unscheduled.load[t]) << ","
          << csv_number(result.scheduled.load[t]) << ","
          << csv_number(result.unscheduled.dispatch.grid_draw[t]) << ","
          << csv_number(result.scheduled.dispatch.grid_draw[t]) << "\n";
    }
    write_file(dir / "load_profiles.csv", csv.str());
  }
  {
    std::ostringstream csv;
    csv << "hour,unscheduled_cost,scheduled_cost\n";
    for (int t = 0; t < kSlotsPerDay; ++t) {
      const double rate = config.price.rates[t];
      csv << t << ","
          << csv_number(result.unscheduled.dispatch.grid_draw[t] * rate) << ","
          << csv_number(result.scheduled.dispatch.grid_draw[t] * rate) << "\n";
    }
    write_file(dir / "hourly_cost.csv", csv.str());
  }
  {
    std::ostringstream csv;
    csv << "case,par\n";
    csv << "unscheduled," << csv_number(result.comparison.par_us) << "\n";
    csv << "scheduled," << csv_number(result.comparison.par_s) << "\n";
    write_file(dir / "par.csv", csv.str());
  }
}

void write_run_directory(const RunResult& result,
                         const std::filesystem::path& dir,
                         const std::string& scenario_echo) {
  std::filesystem::create_directories(dir);
  write_file(dir / "scenario.json", scenario_echo);
  write_file(dir / "summary.json", summary_json(result.comparison));
  emit_plot_data(result, dir);

  std::ostringstream csv;
  csv << "hour,unscheduled_load_kwh,unscheduled_pv_served_kwh,"
         "unscheduled_grid_kwh,unscheduled_surplus_kwh,scheduled_load_kwh,"
         "scheduled_pv_served_kwh,scheduled_grid_kwh,scheduled_surplus_kwh\n";
  for (int t = 0; t < kSlotsPerDay; ++t) {
    const DispatchResult& us = result.unscheduled.dispatch;
    const DispatchResult& s = result.scheduled.dispatch;
    csv << t << "," << csv_number(result.unscheduled.load[t]) << ","
        << csv_number(us.pv_served[t]) << "," << csv_number(us.grid_draw[t])
        << "," << csv_number(us.surplus[t]) << ","
        << csv_number(result.scheduled.load[t]) << ","
        << csv_number(s.pv_served[t]) << "," << csv_number(s.grid_draw[t])
        << "," << csv_number(s.surplus[t]) << "\n";
  }
  write_file(dir / "dispatch.csv", csv.str());
}

OracleVerification verify_against_oracle(const ScenarioConfig& config,
                                         std::uint64_t cap, int runs) {
  OracleVerification verification;
  verification.search_space = search_space_size(config);
  const OracleResult oracle = brute_force_optimum(config, cap);
  verification.oracle_cost = oracle.best_cost;
  for (int i = 0; i < runs; ++i) {
    ScenarioConfig seeded = config;
    seeded.ga.seed = config.ga.seed + static_cast<std::uint64_t>(i);
    const GaRun run = evolve(seeded);
    const double gap = run.best_fitness - oracle.best_cost;
    verification.gaps.push_back(gap);
    if (gap <= 1e-9 * std::max(1.0, std::abs(oracle.best_cost))) {
      ++verification.exact_matches;
    }
  }
  verification.match_fraction =
      runs > 0 ? static_cast<double>(verification.exact_matches) / runs : 0.0;
  return verification;
}

std::string oracle_report_json(const OracleVerification& v) {
  ordered_json doc;
  doc["search_space"] = v.search_space;
  doc["oracle_cost"] = v.oracle_cost;
  doc["runs"] = v.gaps.size();
  doc["exact_matches"] = v.exact_matches;
  doc["match_fraction"] = v.match_fraction;
  doc["gaps"] = v.gaps;
  return doc.dump(2) + "\n";
}

}  // namespace loadsched
