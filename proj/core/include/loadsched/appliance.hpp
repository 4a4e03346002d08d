#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace loadsched {

// Load taxonomy. Necessary loads (NL) run a fixed, predetermined pattern.
// Consistent loads (CL) run their whole duty cycle as one contiguous block.
// Inconsistent loads (ICL) may scatter their ON slots anywhere inside the
// permitted window.
enum class ApplianceCategory { Necessary, Consistent, Inconsistent };

// Canonical short names: "NL", "CL", "ICL".
const char* to_string(ApplianceCategory category);
std::optional<ApplianceCategory> category_from_string(std::string_view name);

struct Appliance {
  std::string id;
  std::string name;
  ApplianceCategory category = ApplianceCategory::Necessary;
  double rating_kwh = 0.0;  // energy drawn per ON slot
  int on_calls = 0;         // required ON slots per day
  int earliest_start = 0;   // first permitted slot
  int latest_end = 0;       // last permitted slot, inclusive

  int window_length() const { return latest_end - earliest_start + 1; }
};

}  // namespace loadsched
