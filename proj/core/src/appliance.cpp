#include "loadsched/appliance.hpp"

namespace loadsched {

const char* to_string(ApplianceCategory category) {
  switch (category) {
    case ApplianceCategory::Necessary:
      return "NL";
    case ApplianceCategory::Consistent:
      return "CL";
    case ApplianceCategory::Inconsistent:
      return "ICL";
  }
  return "?";
}

std::optional<ApplianceCategory> category_from_string(std::string_view name) {
  if (name == "NL") return ApplianceCategory::Necessary;
  if (name == "CL") return ApplianceCategory::Consistent;
  if (name == "ICL") return ApplianceCategory::Inconsistent;
  return std::nullopt;
}

}  // namespace loadsched
