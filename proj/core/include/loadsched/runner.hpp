#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "loadsched/ga.hpp"
#include "loadsched/pv.hpp"
#include "loadsched/scenario.hpp"

namespace loadsched {

// One evaluated case (the unscheduled baseline or the engine's schedule).
// Peak and PAR are taken on the grid draw, which equals the consumption
// profile when no PV is present.
struct CaseResult {
  Schedule schedule;
  LoadProfile load{};
  DispatchResult dispatch;
  double energy_total = 0.0;
  double grid_cost = 0.0;
  double peak_grid = 0.0;
  double par = 0.0;
};

struct ScenarioComparison {
  double E_us_total = 0.0;
  double E_s_total = 0.0;
  double u_us = 0.0;
  double u_s = 0.0;
  double cost_us = 0.0;
  double cost_s = 0.0;
  double par_us = 0.0;
  double par_s = 0.0;
  double bill_reduction_pct = 0.0;
  double par_reduction_pct = 0.0;
  bool eq11_holds = false;  // scheduled peak strictly below unscheduled peak
  bool eq12_holds = false;  // total utilized energy conserved (1e-9 relative)
};

struct RunResult {
  ScenarioConfig config;
  CaseResult unscheduled;
  CaseResult scheduled;
  GaRun ga;
  ScenarioComparison comparison;
};

// Runs the unscheduled baseline and the evolved schedule against the same
// config and fills in the comparison. The config must be valid. Throws
// std::logic_error if energy conservation fails (it cannot, by
// construction; the check stays anyway).
RunResult run_scenario(const ScenarioConfig& config);

// Writes summary.json plus the figure and dispatch CSVs into `dir`
// (created if needed). `scenario_echo` is copied verbatim to scenario.json.
void write_run_directory(const RunResult& result,
                         const std::filesystem::path& dir,
                         const std::string& scenario_echo);

// The five per-figure CSVs: price, PV generation, load profiles, hourly
// cost, PAR. Each carries a documented header row and 24 records (the PAR
// file: one record per case).
void emit_plot_data(const RunResult& result, const std::filesystem::path& dir);

std::string summary_json(const ScenarioComparison& comparison);

struct OracleVerification {
  std::uint64_t search_space = 0;
  double oracle_cost = 0.0;
  std::vector<double> gaps;  // per-seed best fitness minus oracle cost
  int exact_matches = 0;     // gap within 1e-9 relative
  double match_fraction = 0.0;
};

// Runs the exhaustive oracle once and the engine `runs` times with seeds
// seed, seed+1, ... and reports the optimality gap per seed. Propagates
// OracleCapExceededError for oversized instances.
OracleVerification verify_against_oracle(const ScenarioConfig& config,
                                         std::uint64_t cap, int runs);

std::string oracle_report_json(const OracleVerification& verification);

}  // namespace loadsched
