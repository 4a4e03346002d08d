#include <doctest.h>

#include "loadsched/ga.hpp"
#include "loadsched/metrics.hpp"
#include "loadsched/oracle.hpp"
#include "test_helpers.hpp"

using namespace loadsched;
using testutil::make_appliance;

TEST_CASE("search space counting") {
  ScenarioConfig config;
  config.price = testutil::flat_price(1.0);

  SUBCASE("necessary loads contribute no freedom") {
    config.appliances = {
        make_appliance("nl1", ApplianceCategory::Necessary, 1.0, 22),
        make_appliance("nl2", ApplianceCategory::Necessary, 0.5, 10)};
    CHECK(search_space_size(config) == 1);
  }
  SUBCASE("a consistent load has window-minus-duty-plus-one placements") {
    config.appliances = {
        make_appliance("cl", ApplianceCategory::Consistent, 1.0, 5)};
    CHECK(search_space_size(config) == 20);
  }
  SUBCASE("an interruptible load has binomially many placements") {
    config.appliances = {
        make_appliance("icl", ApplianceCategory::Inconsistent, 1.0, 2)};
    CHECK(search_space_size(config) == 276);
  }
  SUBCASE("counts multiply across appliances") {
    config.appliances = {
        make_appliance("nl", ApplianceCategory::Necessary, 1.0, 3),
        make_appliance("cl", ApplianceCategory::Consistent, 1.0, 5),
        make_appliance("icl", ApplianceCategory::Inconsistent, 1.0, 2)};
    CHECK(search_space_size(config) == 20 * 276);
  }
}

TEST_CASE("necessary-only fleet enumerates a single candidate") {
  ScenarioConfig config;
  config.appliances = {
      make_appliance("nl", ApplianceCategory::Necessary, 1.5, 22)};
  config.price = testutil::flat_price(2.0);
  const OracleResult result = brute_force_optimum(config);
  CHECK(result.enumerated_count == 1);
  CHECK(result.best_schedule == earliest_placement(config));
  CHECK(result.best_cost ==
        total_cost(result.best_schedule, config.appliances, config.price));
}

TEST_CASE("enumeration finds the two strict price minima") {
  ScenarioConfig config;
  config.appliances = {
      make_appliance("icl", ApplianceCategory::Inconsistent, 2.0, 2)};
  config.price = testutil::flat_price(9.0);
  config.price.rates[1] = 1.0;
  config.price.rates[3] = 2.0;
  const OracleResult result = brute_force_optimum(config);
  CHECK(result.enumerated_count == 276);
  CHECK(result.best_cost == doctest::Approx(6.0).epsilon(1e-12));
  CHECK(result.best_schedule.on(0, 1));
  CHECK(result.best_schedule.on(0, 3));
}

TEST_CASE("enumerated count equals the computed space") {
  ScenarioConfig config;
  config.appliances = {
      make_appliance("cl", ApplianceCategory::Consistent, 2.0, 6, 2, 20),
      make_appliance("icl", ApplianceCategory::Inconsistent, 1.0, 3, 5, 15)};
  config.price = testutil::flat_price(3.0);
  config.price.rates[7] = 1.0;
  const std::uint64_t space = search_space_size(config);
  const OracleResult result = brute_force_optimum(config);
  CHECK(result.enumerated_count == space);
}

TEST_CASE("the cap is enforced with the computed size") {
  ScenarioConfig config;
  config.appliances = {
      make_appliance("icl1", ApplianceCategory::Inconsistent, 1.0, 12),
      make_appliance("icl2", ApplianceCategory::Inconsistent, 1.0, 12)};
  config.price = testutil::flat_price(1.0);
  try {
    brute_force_optimum(config, 1000);
    FAIL("expected a cap refusal");
  } catch (const OracleCapExceededError& e) {
    CHECK(e.space == search_space_size(config));
    CHECK(e.cap == 1000);
    CHECK(std::string(e.what()).find("cap") != std::string::npos);
  }
}

TEST_CASE("oracle cost bounds the engine's best for any seed") {
  ScenarioConfig config;
  config.appliances = {
      make_appliance("nl", ApplianceCategory::Necessary, 1.0, 24),
      make_appliance("cl", ApplianceCategory::Consistent, 2.5, 4),
      make_appliance("icl", ApplianceCategory::Inconsistent, 1.5, 3)};
  config.price = testutil::flat_price(4.0);
  config.price.rates[11] = 20.0;
  config.price.rates[16] = 2.0;
  SlotArray limit;
  limit.fill(4.0);
  config.demand_limit = limit;
  config.ga.max_generations = 40;
  config.ga.stagnation_window = 40;

  const OracleResult oracle = brute_force_optimum(config);
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    config.ga.seed = seed;
    const GaRun run = evolve(config);
    CHECK(run.best_fitness >= oracle.best_cost - 1e-9);
  }
}

TEST_CASE("oracle is deterministic") {
  ScenarioConfig config;
  config.appliances = {
      make_appliance("icl", ApplianceCategory::Inconsistent, 1.0, 4, 3, 18)};
  config.price = testutil::flat_price(5.0);
  config.price.rates[8] = 4.0;
  config.price.rates[9] = 4.0;  // cost tie; lexicographic genome break
  const OracleResult a = brute_force_optimum(config);
  const OracleResult b = brute_force_optimum(config);
  CHECK(a.best_schedule == b.best_schedule);
  CHECK(a.best_cost == b.best_cost);
}
