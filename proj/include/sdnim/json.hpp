// JSON encodings shared by the CLI and the HTTP service.
#pragma once

#include <nlohmann/json.hpp>

#include "sdnim/classifier.hpp"
#include "sdnim/core.hpp"
#include "sdnim/strategy.hpp"

namespace sdnim {

using json = nlohmann::json;

inline json to_json(const Position& p) { return json(p.piles()); }

/// {"pattern", "vals", "conditions", "outcome"}; condition keys are the
/// labels "2A" .. "5F", present only for the applicable pattern.
inline json to_json(const ConditionReport& r) {
  json conditions = json::object();
  for (const auto& [key, value] : r.conditions) conditions[key] = value;
  return json{{"pattern", to_string(r.pattern)},
              {"vals", r.vals},
              {"conditions", std::move(conditions)},
              {"outcome", to_string(r.outcome)}};
}

inline json to_json(const Move& m) {
  return json{{"delete_index", m.delete_index}, {"split_index", m.split_index}, {"left", m.left}, {"right", m.right}};
}

inline json to_json(const MoveAdvice& a) {
  json j = to_json(a.move);
  j["resulting"] = to_json(a.resulting);
  j["rule"] = a.rule;
  j["claimed_class"] = a.claimed_class;
  return j;
}

/// Reads {"piles": [...]}: an array of at least two positive integers.
inline Position position_from_json(const json& body) {
  if (!body.is_object() || !body.contains("piles")) throw std::invalid_argument("body must be an object with a 'piles' array");
  const json& arr = body.at("piles");
  if (!arr.is_array()) throw std::invalid_argument("'piles' must be an array");
  std::vector<Pile> piles;
  for (const json& v : arr) {
    if (!v.is_number_integer()) throw std::invalid_argument("piles must be integers");
    if (v.is_number_unsigned()) {
      piles.push_back(v.get<Pile>());
    } else {
      auto s = v.get<std::int64_t>();
      if (s <= 0) throw std::invalid_argument("pile sizes must be positive");
      piles.push_back(static_cast<Pile>(s));
    }
  }
  return Position(std::move(piles));
}

}  // namespace sdnim
