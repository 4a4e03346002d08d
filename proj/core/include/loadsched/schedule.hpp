#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "loadsched/time_grid.hpp"

namespace loadsched {

// Binary ON/OFF matrix: one row per appliance, one column per slot.
// Stored flat in row-major order (appliance-major, slot-minor), which is
// also the genome layout used by the search engine.
class Schedule {
 public:
  Schedule() = default;

  // All-OFF schedule for the given number of appliances.
  explicit Schedule(int appliance_count)
      : rows_(appliance_count),
        bits_(static_cast<std::size_t>(appliance_count) * kSlotsPerDay, 0) {}

  // Adopts a flat row-major bit vector. Throws std::invalid_argument when
  // the length is not appliance_count * 24 or an entry is not 0/1.
  Schedule(int appliance_count, std::vector<std::uint8_t> bits);

  int appliance_count() const { return rows_; }

  bool on(int appliance, int slot) const { return bits_[index(appliance, slot)] != 0; }
  void set(int appliance, int slot, bool value) {
    bits_[index(appliance, slot)] = value ? 1 : 0;
  }

  int on_count(int appliance) const;

  std::span<const std::uint8_t> bits() const { return bits_; }
  std::span<std::uint8_t> bits() { return bits_; }
  std::span<const std::uint8_t> row(int appliance) const {
    return {bits_.data() + index(appliance, 0), kSlotsPerDay};
  }
  std::span<std::uint8_t> row(int appliance) {
    return {bits_.data() + index(appliance, 0), kSlotsPerDay};
  }

  bool operator==(const Schedule&) const = default;

 private:
  std::size_t index(int appliance, int slot) const {
    return static_cast<std::size_t>(appliance) * kSlotsPerDay +
           static_cast<std::size_t>(slot);
  }

  int rows_ = 0;
  std::vector<std::uint8_t> bits_;
};

}  // namespace loadsched
