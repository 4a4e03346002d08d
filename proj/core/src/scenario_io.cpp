#include "loadsched/scenario_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace loadsched {

namespace {

using nlohmann::json;
using ordered_json = nlohmann::ordered_json;

class Parser {
 public:
  std::vector<ValidationIssue> issues;

  void add(std::string field, std::string message) {
    issues.push_back({std::move(field), std::move(message)});
  }

  // Flags unknown keys and missing required keys of an object.
  void check_keys(const json& obj, const std::string& path,
                  const std::vector<std::string>& allowed,
                  const std::vector<std::string>& required) {
    for (const auto& item : obj.items()) {
      if (std::find(allowed.begin(), allowed.end(), item.key()) ==
          allowed.end()) {
        add(path.empty() ? item.key() : path + "." + item.key(),
            "unknown key");
      }
    }
    for (const std::string& key : required) {
      if (!obj.contains(key)) {
        add(path.empty() ? key : path + "." + key, "missing required key");
      }
    }
  }

  std::optional<double> number(const json& obj, const std::string& path,
                               const std::string& key) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_number()) {
      add(path + key, "must be a number");
      return std::nullopt;
    }
    return v.get<double>();
  }

  std::optional<int> integer(const json& obj, const std::string& path,
                             const std::string& key) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_number_integer()) {
      add(path + key, "must be an integer");
      return std::nullopt;
    }
    return v.get<int>();
  }

  std::optional<std::uint64_t> unsigned64(const json& obj,
                                          const std::string& path,
                                          const std::string& key) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_number_unsigned() && !(v.is_number_integer() &&
                                     v.get<std::int64_t>() >= 0)) {
      add(path + key, "must be a nonnegative integer");
      return std::nullopt;
    }
    return v.get<std::uint64_t>();
  }

  std::optional<std::string> string(const json& obj, const std::string& path,
                                    const std::string& key) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_string()) {
      add(path + key, "must be a string");
      return std::nullopt;
    }
    return v.get<std::string>();
  }

  std::optional<SlotArray> slot_array(const json& obj, const std::string& key) {
    if (!obj.contains(key)) return std::nullopt;
    const json& v = obj.at(key);
    if (!v.is_array() || v.size() != kSlotsPerDay) {
      std::ostringstream msg;
      msg << "must be an array of " << kSlotsPerDay << " numbers";
      add(key, msg.str());
      return std::nullopt;
    }
    SlotArray out{};
    for (int t = 0; t < kSlotsPerDay; ++t) {
      if (!v[t].is_number()) {
        std::ostringstream field;
        field << key << "[" << t << "]";
        add(field.str(), "must be a number");
        return std::nullopt;
      }
      out[t] = v[t].get<double>();
    }
    return out;
  }
};

}  // namespace

ScenarioParseResult parse_scenario_json(const std::string& text) {
  ScenarioParseResult result;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    result.issues.push_back({"$", std::string("invalid JSON: ") + e.what()});
    return result;
  }
  if (!doc.is_object()) {
    result.issues.push_back({"$", "scenario document must be a JSON object"});
    return result;
  }

  Parser p;
  p.check_keys(doc, "", {"appliances", "price", "demand_limit", "pv", "ga"},
               {"appliances", "price"});

  ScenarioConfig config;

  if (doc.contains("appliances")) {
    const json& arr = doc.at("appliances");
    if (!arr.is_array()) {
      p.add("appliances", "must be an array");
    } else {
      for (std::size_t i = 0; i < arr.size(); ++i) {
        std::ostringstream prefix;
        prefix << "appliances[" << i << "].";
        const std::string path = prefix.str();
        const json& item = arr[i];
        if (!item.is_object()) {
          p.add(path, "must be an object");
          continue;
        }
        p.check_keys(item, path.substr(0, path.size() - 1),
                     {"id", "name", "category", "rating_kwh", "on_calls",
                      "earliest_start", "latest_end"},
                     {"id", "name", "category", "rating_kwh", "on_calls",
                      "earliest_start", "latest_end"});
        Appliance a;
        if (auto v = p.string(item, path, "id")) a.id = *v;
        if (auto v = p.string(item, path, "name")) a.name = *v;
        if (auto v = p.string(item, path, "category")) {
          if (auto c = category_from_string(*v)) {
            a.category = *c;
          } else {
            p.add(path + "category", "must be one of NL, CL, ICL");
          }
        }
        if (auto v = p.number(item, path, "rating_kwh")) a.rating_kwh = *v;
        if (auto v = p.integer(item, path, "on_calls")) a.on_calls = *v;
        if (auto v = p.integer(item, path, "earliest_start"))
          a.earliest_start = *v;
        if (auto v = p.integer(item, path, "latest_end")) a.latest_end = *v;
        config.appliances.push_back(std::move(a));
      }
    }
  }

  if (doc.contains("price")) {
    if (auto v = p.slot_array(doc, "price")) config.price.rates = *v;
  }
  if (doc.contains("demand_limit")) {
    if (auto v = p.slot_array(doc, "demand_limit")) config.demand_limit = *v;
  }

  if (doc.contains("pv")) {
    const json& pv = doc.at("pv");
    if (!pv.is_object()) {
      p.add("pv", "must be an object");
    } else {
      p.check_keys(pv, "pv",
                   {"sigma", "delta", "scale", "day_start", "day_end"},
                   {"sigma", "delta", "scale", "day_start", "day_end"});
      PvProfile profile;
      if (auto v = p.number(pv, "pv.", "sigma")) profile.sigma = *v;
      if (auto v = p.number(pv, "pv.", "delta")) profile.delta = *v;
      if (auto v = p.number(pv, "pv.", "scale")) profile.scale = *v;
      if (auto v = p.integer(pv, "pv.", "day_start")) profile.day_start = *v;
      if (auto v = p.integer(pv, "pv.", "day_end")) profile.day_end = *v;
      config.pv = profile;
    }
  }

  if (doc.contains("ga")) {
    const json& ga = doc.at("ga");
    if (!ga.is_object()) {
      p.add("ga", "must be an object");
    } else {
      p.check_keys(ga, "ga",
                   {"population_size", "max_generations", "tournament_size",
                    "crossover_rate", "mutation_rate", "stagnation_window",
                    "seed"},
                   {});
      if (auto v = p.integer(ga, "ga.", "population_size"))
        config.ga.population_size = *v;
      if (auto v = p.integer(ga, "ga.", "max_generations"))
        config.ga.max_generations = *v;
      if (auto v = p.integer(ga, "ga.", "tournament_size"))
        config.ga.tournament_size = *v;
      if (auto v = p.number(ga, "ga.", "crossover_rate"))
        config.ga.crossover_rate = *v;
      if (auto v = p.number(ga, "ga.", "mutation_rate"))
        config.ga.mutation_rate = *v;
      if (auto v = p.integer(ga, "ga.", "stagnation_window"))
        config.ga.stagnation_window = *v;
      if (auto v = p.unsigned64(ga, "ga.", "seed")) config.ga.seed = *v;
    }
  }

  result.issues = std::move(p.issues);
  if (result.issues.empty()) {
    auto domain_issues = validate(config);
    result.issues.insert(result.issues.end(), domain_issues.begin(),
                         domain_issues.end());
  }
  if (result.issues.empty()) {
    result.config = std::move(config);
  }
  return result;
}

ScenarioParseResult load_scenario_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    ScenarioParseResult result;
    result.issues.push_back(
        {"$", "cannot open scenario file: " + path.string()});
    return result;
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario_json(buffer.str());
}

std::string scenario_to_json(const ScenarioConfig& config) {
  ordered_json doc;
  doc["appliances"] = ordered_json::array();
  for (const Appliance& a : config.appliances) {
    ordered_json item;
    item["id"] = a.id;
    item["name"] = a.name;
    item["category"] = to_string(a.category);
    item["rating_kwh"] = a.rating_kwh;
    item["on_calls"] = a.on_calls;
    item["earliest_start"] = a.earliest_start;
    item["latest_end"] = a.latest_end;
    doc["appliances"].push_back(std::move(item));
  }
  doc["price"] = config.price.rates;
  if (config.demand_limit) doc["demand_limit"] = *config.demand_limit;
  if (config.pv) {
    const PvProfile& pv = *config.pv;
    doc["pv"] = {{"sigma", pv.sigma},
                 {"delta", pv.delta},
                 {"scale", pv.scale},
                 {"day_start", pv.day_start},
                 {"day_end", pv.day_end}};
  }
  const GaParams& ga = config.ga;
  ordered_json ga_doc;
  ga_doc["population_size"] = ga.population_size;
  ga_doc["max_generations"] = ga.max_generations;
  ga_doc["tournament_size"] = ga.tournament_size;
  ga_doc["crossover_rate"] = ga.crossover_rate;
  if (ga.mutation_rate) ga_doc["mutation_rate"] = *ga.mutation_rate;
  ga_doc["stagnation_window"] = ga.stagnation_window;
  ga_doc["seed"] = ga.seed;
  doc["ga"] = std::move(ga_doc);
  return doc.dump(2) + "\n";
}

}  // namespace loadsched
