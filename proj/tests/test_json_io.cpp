#include <doctest.h>

#include "ewlnash/json_io.hpp"
#include "ewlnash/rng.hpp"

using namespace ewlnash;
using io::json;

TEST_CASE("game JSON round trip") {
    const json j = json::parse(R"({"payoffs": {"CC": [3, 3], "DD": [1, 1], "CD": [0, 5], "DC": [5, 0]}})");
    const Game g = io::game_from_json(j);
    CHECK(g.at(Outcome::CC).to_one == 3.0);
    CHECK(g.at(Outcome::CD).to_two == 5.0);
    CHECK(g.at(Outcome::DC).to_one == 5.0);
    CHECK(io::game_from_json(io::to_json(g)).at(Outcome::DD).to_two == 1.0);
}

TEST_CASE("strategy JSON round trip preserves the moment matrix") {
    Rng rng(71);
    for (int n = 0; n < 20; ++n) {
        const MixedStrategy s = rng.strategy(6);
        const MixedStrategy back = io::strategy_from_json(io::to_json(s));
        CHECK(equivalent(s, back));
        CHECK(back.size() == s.size());
    }
}

TEST_CASE("malformed inputs raise parse-shaped errors") {
    CHECK_THROWS_AS(io::game_from_json(json::parse(R"({"payoffs": {"CC": [1, 2]}})")),
                    json::exception);
    CHECK_THROWS_AS(io::game_from_json(json::parse(R"({"payoffs": {"CC": [1], "DD": [1, 1],
                    "CD": [0, 5], "DC": [5, 0]}})")),
                    json::exception);
    CHECK_THROWS_AS(io::strategy_from_json(json::parse(R"({"atoms": "nope"})")), json::exception);
    CHECK_THROWS_AS(io::strategy_from_json(json::parse(R"({})")), json::exception);
}

TEST_CASE("invariant violations raise validation errors with field names") {
    // Non-unit quaternion.
    try {
        io::strategy_from_json(json::parse(R"({"atoms": [{"q": [2, 0, 0, 0], "w": 1.0}]})"), "p1");
        FAIL("expected NotUnit");
    } catch (const NotUnit& e) {
        CHECK(std::string(e.field()).find("p1.atoms[0].q") != std::string::npos);
    }
    // Weights not summing to 1.
    try {
        io::strategy_from_json(json::parse(R"({"atoms": [{"q": [1, 0, 0, 0], "w": 0.4}]})"), "p2");
        FAIL("expected ValidationError");
    } catch (const ValidationError& e) {
        CHECK(std::string(e.field()).find("p2") != std::string::npos);
    }
}

TEST_CASE("reports serialize with their witnesses") {
    Rng rng(72);
    const Game g = rng.generic_game();
    const OrthoFrame frame(UnitQuaternion::basis(0), UnitQuaternion::basis(1),
                           UnitQuaternion::basis(2), UnitQuaternion::basis(3));
    const Classification cls =
        classify(g, MixedStrategy::uniform(frame), MixedStrategy::uniform(frame));
    const json j = io::to_json(cls);
    CHECK(j.at("type").get<std::string>() == "a");
    CHECK(j.at("report").at("is_equilibrium").get<bool>());
    CHECK(j.at("canonical_p1").size() == 4);
    CHECK(j.at("translation").is_array());

    const json verdict = io::to_json(is_generic(Game({PayoffPair{0, 0}, PayoffPair{0, 1},
                                                      PayoffPair{1, 2}, PayoffPair{2, 3}})));
    CHECK_FALSE(verdict.at("generic").get<bool>());
    CHECK(verdict.contains("witness"));
}
