#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "loadsched/scenario.hpp"

namespace loadsched {

// Parse outcome: either a validated config, or the full list of problems
// (syntax errors, unknown keys, type/shape mismatches, domain violations).
struct ScenarioParseResult {
  std::optional<ScenarioConfig> config;
  std::vector<ValidationIssue> issues;

  bool ok() const { return config.has_value(); }
};

// Strict parser for the scenario JSON document. Unknown keys are rejected
// at every level. See README for the schema.
ScenarioParseResult parse_scenario_json(const std::string& text);

ScenarioParseResult load_scenario_file(const std::filesystem::path& path);

// Serializes a config back to scenario JSON (used by tests and generators;
// the CLI echoes the original file bytes instead).
std::string scenario_to_json(const ScenarioConfig& config);

}  // namespace loadsched
