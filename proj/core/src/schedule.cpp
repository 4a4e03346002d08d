#include "loadsched/schedule.hpp"

#include <stdexcept>
#include <utility>

namespace loadsched {

Schedule::Schedule(int appliance_count, std::vector<std::uint8_t> bits)
    : rows_(appliance_count), bits_(std::move(bits)) {
  if (bits_.size() != static_cast<std::size_t>(appliance_count) * kSlotsPerDay) {
    throw std::invalid_argument("schedule bit vector has wrong length");
  }
  for (std::uint8_t b : bits_) {
    if (b > 1) throw std::invalid_argument("schedule entries must be 0 or 1");
  }
}

int Schedule::on_count(int appliance) const {
  int count = 0;
  for (int t = 0; t < kSlotsPerDay; ++t) {
    count += bits_[index(appliance, t)];
  }
  return count;
}

}  // namespace loadsched
