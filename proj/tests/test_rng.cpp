#include <doctest.h>

#include "loadsched/rng.hpp"

using loadsched::Rng;

TEST_CASE("same seed produces the same stream") {
  Rng a(123);
  Rng b(123);
  for (int i = 0; i < 1000; ++i) {
    CHECK(a.next_u64() == b.next_u64());
  }
}

TEST_CASE("next_double stays in [0, 1)") {
  Rng rng(7);
  for (int i = 0; i < 10000; ++i) {
    const double x = rng.next_double();
    CHECK(x >= 0.0);
    CHECK(x < 1.0);
  }
}

TEST_CASE("next_below respects the bound and hits every residue") {
  Rng rng(99);
  bool seen[7] = {};
  for (int i = 0; i < 10000; ++i) {
    const auto v = rng.next_below(7);
    REQUIRE(v < 7);
    seen[v] = true;
  }
  for (bool s : seen) CHECK(s);
}

TEST_CASE("next_int covers the inclusive range") {
  Rng rng(5);
  int lo_seen = 100, hi_seen = -100;
  for (int i = 0; i < 10000; ++i) {
    const int v = rng.next_int(3, 9);
    REQUIRE(v >= 3);
    REQUIRE(v <= 9);
    lo_seen = std::min(lo_seen, v);
    hi_seen = std::max(hi_seen, v);
  }
  CHECK(lo_seen == 3);
  CHECK(hi_seen == 9);
}
