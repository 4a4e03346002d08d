#pragma once

#include <array>

namespace loadsched {

// One scheduling day is 24 one-hour slots, indexed 0..23. Every per-slot
// vector in the library has exactly this many entries.
inline constexpr int kSlotsPerDay = 24;

using SlotArray = std::array<double, kSlotsPerDay>;

// Aggregate energy drawn in each slot, kWh.
using LoadProfile = SlotArray;

}  // namespace loadsched
