#pragma once

#include <string>

#include <json.hpp>

#include "vessiot/curvature.hpp"
#include "vessiot/dimensions.hpp"
#include "vessiot/jet.hpp"
#include "vessiot/structure.hpp"

namespace vessiot {

// JSON views of the engine's records. Expressions are written as canonical
// strings so every value re-parses exactly.

[[nodiscard]] nlohmann::json to_json(const StructureReport& report);
[[nodiscard]] nlohmann::json to_json(const EquivalenceVerdict& verdict);
[[nodiscard]] nlohmann::json to_json(const DimensionTable& table);
[[nodiscard]] nlohmann::json to_json(const CurvatureData& data);
[[nodiscard]] nlohmann::json to_json(const Connection2D& connection);
[[nodiscard]] nlohmann::json to_json(const LinearJetEquation& equation);
[[nodiscard]] nlohmann::json to_json(const std::map<Symbol, Rational>& point);

/// One `path: value` line per leaf, in key order.
[[nodiscard]] std::string render_text(const nlohmann::json& document);

}  // namespace vessiot
