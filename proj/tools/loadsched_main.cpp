// Command-line front end: loads a scenario file, compares the unscheduled
// baseline against the evolved schedule, and writes the run directory
// (summary.json plus figure CSVs). Optionally cross-checks the engine
// against the exhaustive oracle on small instances.

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "loadsched/oracle.hpp"
#include "loadsched/runner.hpp"
#include "loadsched/scenario_io.hpp"

namespace {

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void print_issues(const std::vector<loadsched::ValidationIssue>& issues) {
  std::cerr << "scenario rejected:\n";
  for (const auto& issue : issues) {
    std::cerr << "  " << issue.field << ": " << issue.message << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Household demand-response load scheduler"};
  app.require_subcommand(1);

  std::string scenario_path;
  std::string out_dir = "out";
  std::uint64_t seed_override = 0;
  bool has_seed_override = false;
  bool no_pv = false;
  bool with_oracle = false;
  std::uint64_t oracle_cap = loadsched::kDefaultOracleCap;
  int oracle_runs = 100;
  bool strict = false;

  CLI::App* run = app.add_subcommand(
      "run", "Run the scheduled/unscheduled comparison for a scenario file");
  run->add_option("scenario", scenario_path, "Scenario JSON file")
      ->required();
  run->add_option("--out", out_dir, "Output directory (default: out)");
  run->add_option("--seed", seed_override, "Override the scenario's GA seed")
      ->each([&has_seed_override](const std::string&) {
        has_seed_override = true;
      });
  run->add_flag("--no-pv", no_pv, "Ignore the scenario's PV source");
  run->add_flag("--oracle", with_oracle,
                "Also verify the engine against the exhaustive oracle");
  run->add_option("--cap", oracle_cap,
                  "Oracle enumeration cap (default 2^22)");
  run->add_option("--runs", oracle_runs,
                  "Seeded engine runs for oracle verification (default 100)");
  run->add_flag("--strict", strict,
                "Exit nonzero if fewer than 95% of oracle runs match");

  CLI11_PARSE(app, argc, argv);

  auto parsed = loadsched::load_scenario_file(scenario_path);
  if (!parsed.ok()) {
    print_issues(parsed.issues);
    return 1;
  }
  loadsched::ScenarioConfig config = std::move(*parsed.config);
  if (has_seed_override) config.ga.seed = seed_override;
  if (no_pv) config.pv.reset();

  try {
    const loadsched::RunResult result = loadsched::run_scenario(config);
    const auto& c = result.comparison;

    loadsched::write_run_directory(result, out_dir, read_file(scenario_path));

    std::cout << "unscheduled: cost " << c.cost_us << ", peak " << c.u_us
              << " kWh, PAR " << c.par_us << "\n";
    std::cout << "scheduled:   cost " << c.cost_s << ", peak " << c.u_s
              << " kWh, PAR " << c.par_s << " ("
              << result.ga.generations_executed << " generations)\n";
    std::cout << "bill reduction " << c.bill_reduction_pct
              << "%, PAR reduction " << c.par_reduction_pct << "%\n";
    std::cout << "energy conserved: " << (c.eq12_holds ? "yes" : "NO")
              << ", peak reduced: " << (c.eq11_holds ? "yes" : "no") << "\n";
    std::cout << "results written to " << out_dir << "\n";

    if (with_oracle) {
      const auto verification =
          loadsched::verify_against_oracle(config, oracle_cap, oracle_runs);
      std::ofstream report(std::filesystem::path(out_dir) /
                           "oracle_report.json");
      report << loadsched::oracle_report_json(verification);
      std::cout << "oracle: space " << verification.search_space << ", cost "
                << verification.oracle_cost << ", exact matches "
                << verification.exact_matches << "/"
                << verification.gaps.size() << "\n";
      if (strict && verification.match_fraction < 0.95) {
        std::cerr << "strict mode: match fraction "
                  << verification.match_fraction << " below 0.95\n";
        return 1;
      }
    }
  } catch (const loadsched::OracleCapExceededError& e) {
    std::cerr << "oracle refused: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  return 0;
}
