#include <doctest.h>

#include <cmath>
#include <numbers>

#include "loadsched/pv.hpp"
#include "loadsched/rng.hpp"
#include "test_helpers.hpp"

using namespace loadsched;

namespace {

PvProfile default_pv() {
  PvProfile pv;
  pv.sigma = 3.0;
  pv.delta = 13.0;
  pv.scale = 10.0;
  pv.day_start = 6;
  pv.day_end = 18;
  return pv;
}

}  // namespace

TEST_CASE("generation at the peak hour equals scale over sqrt(2 pi) sigma") {
  const PvProfile pv = default_pv();
  const double expected = 10.0 / (std::sqrt(2.0 * std::numbers::pi) * 3.0);
  CHECK(pv_generation(13, pv) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(pv_generation(13, pv) == doctest::Approx(1.329808).epsilon(1e-6));
}

TEST_CASE("one sigma away scales the peak by exp(-1/2)") {
  const PvProfile pv = default_pv();
  const double at_peak = pv_generation(13, pv);
  CHECK(pv_generation(16, pv) ==
        doctest::Approx(at_peak * std::exp(-0.5)).epsilon(1e-12));
  CHECK(pv_generation(10, pv) ==
        doctest::Approx(at_peak * std::exp(-0.5)).epsilon(1e-12));
}

TEST_CASE("no generation outside the daylight window") {
  const PvProfile pv = default_pv();
  for (int t = 0; t < pv.day_start; ++t) CHECK(pv_generation(t, pv) == 0.0);
  for (int t = pv.day_end + 1; t < kSlotsPerDay; ++t) {
    CHECK(pv_generation(t, pv) == 0.0);
  }
}

TEST_CASE("zero PV all day routes everything to the grid") {
  LoadProfile load{};
  load[2] = 3.0;
  load[20] = 1.5;
  PvProfile pv = default_pv();
  pv.scale = 0.0;
  const DispatchResult r = dispatch(load, pv);
  for (int t = 0; t < kSlotsPerDay; ++t) {
    CHECK(r.grid_draw[t] == load[t]);
    CHECK(r.pv_served[t] == 0.0);
  }
}

TEST_CASE("dispatch hand examples at the peak hour") {
  const PvProfile pv = default_pv();
  const double gen = pv_generation(13, pv);

  LoadProfile small{};
  small[13] = 1.0;
  DispatchResult r = dispatch(small, pv);
  CHECK(r.pv_served[13] == doctest::Approx(1.0));
  CHECK(r.grid_draw[13] == 0.0);
  CHECK(r.surplus[13] == doctest::Approx(gen - 1.0).epsilon(1e-12));

  LoadProfile big{};
  big[13] = 5.0;
  r = dispatch(big, pv);
  CHECK(r.pv_served[13] == doctest::Approx(gen).epsilon(1e-12));
  CHECK(r.grid_draw[13] == doctest::Approx(5.0 - gen).epsilon(1e-12));
  CHECK(r.surplus[13] == 0.0);
}

TEST_CASE("energy is conserved per slot for random loads and profiles") {
  Rng rng(512);
  for (int trial = 0; trial < 300; ++trial) {
    PvProfile pv;
    pv.day_start = rng.next_int(0, 11);
    pv.day_end = rng.next_int(pv.day_start, 23);
    pv.delta = pv.day_start +
               rng.next_double() * (pv.day_end - pv.day_start);
    pv.sigma = 0.5 + rng.next_double() * 5.0;
    pv.scale = rng.next_double() * 30.0;

    LoadProfile load{};
    for (auto& v : load) v = rng.next_double() * 8.0;

    const DispatchResult r = dispatch(load, pv);
    for (int t = 0; t < kSlotsPerDay; ++t) {
      CHECK(r.pv_served[t] + r.surplus[t] ==
            doctest::Approx(r.pv_generated[t]).epsilon(1e-9));
      CHECK(r.pv_served[t] + r.grid_draw[t] ==
            doctest::Approx(load[t]).epsilon(1e-9));
      CHECK(r.pv_served[t] >= 0.0);
      CHECK(r.grid_draw[t] >= 0.0);
      CHECK(r.surplus[t] >= 0.0);
    }
  }
}

TEST_CASE("strict surplus holds exactly when load is below generation") {
  const PvProfile pv = default_pv();
  Rng rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    LoadProfile load{};
    for (auto& v : load) v = rng.next_double() * 2.0;
    const DispatchResult r = dispatch(load, pv);
    const auto saturated = saturated_slots(r);
    for (int t = pv.day_start; t <= pv.day_end; ++t) {
      const bool strict_surplus = r.surplus[t] > 0.0;
      CHECK(strict_surplus == (load[t] < r.pv_generated[t]));
      const bool is_saturated =
          std::find(saturated.begin(), saturated.end(), t) != saturated.end();
      CHECK(is_saturated == !strict_surplus);
    }
  }
}

TEST_CASE("grid cost without pv equals total cost exactly") {
  const auto fleet = testutil::reference_fleet();
  Rng rng(99);
  PriceSignal price;
  for (auto& r : price.rates) r = rng.next_double() * 25.0;
  for (int trial = 0; trial < 100; ++trial) {
    Schedule s(static_cast<int>(fleet.size()));
    for (auto& b : s.bits()) b = rng.next_bool() ? 1 : 0;
    CHECK(grid_cost_after_pv(s, fleet, price, std::nullopt) ==
          total_cost(s, fleet, price));
  }
}

TEST_CASE("full self-supply makes the grid cost zero") {
  std::vector<Appliance> fleet = {testutil::make_appliance(
      "a", ApplianceCategory::Inconsistent, 0.1, 1)};
  Schedule s(1);
  s.set(0, 13, true);
  PvProfile pv = default_pv();
  CHECK(grid_cost_after_pv(s, fleet, testutil::flat_price(5.0), pv) == 0.0);
}

TEST_CASE("derived cost example: partially covered load at a priced peak") {
  std::vector<Appliance> fleet = {testutil::make_appliance(
      "a", ApplianceCategory::Inconsistent, 5.0, 1)};
  Schedule s(1);
  s.set(0, 13, true);
  const PvProfile pv = default_pv();
  PriceSignal price = testutil::flat_price(0.0);
  price.rates[13] = 5.0;
  const double gen = pv_generation(13, pv);
  CHECK(grid_cost_after_pv(s, fleet, price, pv) ==
        doctest::Approx((5.0 - gen) * 5.0).epsilon(1e-12));
  CHECK(grid_cost_after_pv(s, fleet, price, pv) ==
        doctest::Approx(18.351).epsilon(1e-4));
}

TEST_CASE("raising the pv scale never raises the grid cost") {
  const auto fleet = testutil::reference_fleet();
  Rng rng(1234);
  PriceSignal price;
  for (auto& r : price.rates) r = rng.next_double() * 25.0;
  for (int trial = 0; trial < 100; ++trial) {
    Schedule s(static_cast<int>(fleet.size()));
    for (auto& b : s.bits()) b = rng.next_bool() ? 1 : 0;
    PvProfile pv = default_pv();
    pv.scale = 0.0;
    double previous = grid_cost_after_pv(s, fleet, price, pv);
    for (double scale : {2.5, 5.0, 10.0, 20.0, 40.0, 80.0}) {
      pv.scale = scale;
      const double cost = grid_cost_after_pv(s, fleet, price, pv);
      CHECK(cost <= previous + 1e-9);
      previous = cost;
    }
  }
}
