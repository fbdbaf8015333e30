#pragma once

#include <json.hpp>

#include "ewlnash/equilibrium.hpp"

namespace ewlnash::io {

using nlohmann::json;

inline constexpr const char* kSchemaVersion = "1";

json to_json(const Quaternion& q);
Quaternion quaternion_from_json(const json& j, const std::string& field);
UnitQuaternion unit_from_json(const json& j, const std::string& field);

/// Game format: {"payoffs": {"CC": [X, Y], "DD": [X, Y], "CD": [X, Y], "DC": [X, Y]}}
json to_json(const Game& g);
Game game_from_json(const json& j);

/// Strategy format: {"atoms": [{"q": [p1, p2, p3, p4], "w": 0.25}, ...]}
json to_json(const MixedStrategy& s);
MixedStrategy strategy_from_json(const json& j, const std::string& field = "strategy");

json to_json(const Mat4& m);
json to_json(const GenericityReport& r);
json to_json(const GameStats& s);
json to_json(const BestResponse& r);
json to_json(const EquilibriumReport& r);
json to_json(const IntertwineWitness& w);
json to_json(const FullIntertwineWitness& w);
json to_json(const Classification& c);
json to_json(const FoundEquilibrium& f);

/// Reads and parses a file; throws nlohmann parse errors (malformed input)
/// or ValidationError (file unreadable).
json load_file(const std::string& path);

} // namespace ewlnash::io
