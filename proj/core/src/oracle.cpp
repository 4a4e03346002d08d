#include "loadsched/oracle.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <vector>

#include "loadsched/ga.hpp"

namespace loadsched {

namespace {

std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<std::uint64_t>(n - k + i) /
             static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t placement_count(const Appliance& a) {
  switch (a.category) {
    case ApplianceCategory::Necessary:
      return 1;
    case ApplianceCategory::Consistent:
      return static_cast<std::uint64_t>(a.window_length() - a.on_calls + 1);
    case ApplianceCategory::Inconsistent:
      return binomial(a.window_length(), a.on_calls);
  }
  return 0;
}

using RowMask = std::uint32_t;

RowMask block_mask(int start, int length) {
  RowMask mask = 0;
  for (int t = start; t < start + length; ++t) mask |= RowMask{1} << t;
  return mask;
}

// Every structurally feasible row for one appliance, as slot bitmasks.
std::vector<RowMask> placements(const Appliance& a) {
  std::vector<RowMask> rows;
  switch (a.category) {
    case ApplianceCategory::Necessary:
      rows.push_back(block_mask(a.earliest_start, a.on_calls));
      break;
    case ApplianceCategory::Consistent:
      for (int s = a.earliest_start; s <= a.latest_end - a.on_calls + 1; ++s) {
        rows.push_back(block_mask(s, a.on_calls));
      }
      break;
    case ApplianceCategory::Inconsistent: {
      // All on_calls-subsets of the window, in lexicographic slot order.
      const int w = a.window_length();
      const int k = a.on_calls;
      std::vector<int> pick(k);
      for (int i = 0; i < k; ++i) pick[i] = i;
      for (;;) {
        RowMask mask = 0;
        for (int i : pick) mask |= RowMask{1} << (a.earliest_start + i);
        rows.push_back(mask);
        int p = k - 1;
        while (p >= 0 && pick[p] == w - k + p) --p;
        if (p < 0) break;
        ++pick[p];
        for (int q = p + 1; q < k; ++q) pick[q] = pick[q - 1] + 1;
      }
      break;
    }
  }
  return rows;
}

bool genome_less(const Schedule& lhs, const Schedule& rhs) {
  const auto a = lhs.bits();
  const auto b = rhs.bits();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace

std::uint64_t search_space_size(const ScenarioConfig& config) {
  std::uint64_t total = 1;
  for (const Appliance& a : config.appliances) {
    const std::uint64_t count = placement_count(a);
    if (__builtin_mul_overflow(total, count, &total)) {
      return std::numeric_limits<std::uint64_t>::max();
    }
  }
  return total;
}

OracleCapExceededError::OracleCapExceededError(std::uint64_t space_,
                                               std::uint64_t cap_)
    : std::runtime_error([&] {
        std::ostringstream msg;
        msg << "search space has " << space_
            << " schedules, above the enumeration cap " << cap_;
        return msg.str();
      }()),
      space(space_),
      cap(cap_) {}

OracleResult brute_force_optimum(const ScenarioConfig& config,
                                 std::uint64_t cap) {
  const std::uint64_t space = search_space_size(config);
  if (space > cap) throw OracleCapExceededError(space, cap);

  const int n = static_cast<int>(config.appliances.size());
  std::vector<std::vector<RowMask>> rows(n);
  for (int a = 0; a < n; ++a) rows[a] = placements(config.appliances[a]);

  Schedule current(n);
  auto apply = [&current](int appliance, RowMask mask) {
    for (int t = 0; t < kSlotsPerDay; ++t) {
      current.set(appliance, t, (mask >> t & 1u) != 0);
    }
  };
  std::vector<std::size_t> cursor(n, 0);
  for (int a = 0; a < n; ++a) apply(a, rows[a][0]);

  OracleResult best;
  best.best_cost = std::numeric_limits<double>::infinity();
  bool have_best = false;

  for (;;) {
    ++best.enumerated_count;
    const double cost = fitness(current, config);
    if (!have_best || cost < best.best_cost ||
        (cost == best.best_cost && genome_less(current, best.best_schedule))) {
      best.best_cost = cost;
      best.best_schedule = current;
      have_best = true;
    }
    int a = 0;
    while (a < n) {
      if (++cursor[a] < rows[a].size()) {
        apply(a, rows[a][cursor[a]]);
        break;
      }
      cursor[a] = 0;
      apply(a, rows[a][0]);
      ++a;
    }
    if (a == n) break;
  }

  return best;
}

}  // namespace loadsched
