#pragma once

#include <cstdint>
#include <stdexcept>

#include "loadsched/schedule.hpp"
#include "loadsched/scenario.hpp"

namespace loadsched {

struct OracleResult {
  Schedule best_schedule;
  double best_cost = 0.0;
  std::uint64_t enumerated_count = 0;
};

// Number of structurally feasible schedules: the product over appliances of
// 1 for NL, (W - OC + 1) for CL, and C(W, OC) for ICL. Saturates at
// uint64 max instead of overflowing.
std::uint64_t search_space_size(const ScenarioConfig& config);

inline constexpr std::uint64_t kDefaultOracleCap = std::uint64_t{1} << 22;

class OracleCapExceededError : public std::runtime_error {
 public:
  OracleCapExceededError(std::uint64_t space, std::uint64_t cap);

  std::uint64_t space;
  std::uint64_t cap;
};

// Exact reference optimum by exhausting every structurally feasible
// schedule with the same fitness the search engine uses. Cost ties break
// toward the lexicographically smallest genome. Deterministic. Refuses
// (throws OracleCapExceededError) when the space exceeds the cap.
OracleResult brute_force_optimum(const ScenarioConfig& config,
                                 std::uint64_t cap = kDefaultOracleCap);

}  // namespace loadsched
