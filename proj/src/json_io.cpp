#include "ewlnash/json_io.hpp"

#include <fstream>

namespace ewlnash::io {

json to_json(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

Quaternion quaternion_from_json(const json& j, const std::string& field) {
    if (!j.is_array() || j.size() != 4)
        throw json::other_error::create(501, "quaternion at " + field + " must be an array of four numbers", &j);
    Quaternion q;
    for (int t = 0; t < 4; ++t) q.coord(t) = j.at(t).get<double>();
    return q;
}

UnitQuaternion unit_from_json(const json& j, const std::string& field) {
    return UnitQuaternion(quaternion_from_json(j, field), field.c_str());
}

json to_json(const Game& g) {
    json payoffs = json::object();
    for (int t = 0; t < 4; ++t)
        payoffs[kOutcomeNames[t]] = json::array({g.at(t).to_one, g.at(t).to_two});
    return json{{"payoffs", payoffs}};
}

Game game_from_json(const json& j) {
    const json& payoffs = j.at("payoffs");
    std::array<PayoffPair, 4> table;
    for (int t = 0; t < 4; ++t) {
        const json& pair = payoffs.at(kOutcomeNames[t]);
        if (!pair.is_array() || pair.size() != 2)
            throw json::other_error::create(
                501, std::string("payoffs.") + kOutcomeNames[t] + " must be [X, Y]", &pair);
        table[t] = {pair.at(0).get<double>(), pair.at(1).get<double>()};
    }
    return Game(table);
}

json to_json(const MixedStrategy& s) {
    json atoms = json::array();
    for (const Atom& a : s.atoms()) atoms.push_back({{"q", to_json(a.point.value())}, {"w", a.weight}});
    return json{{"atoms", atoms}};
}

MixedStrategy strategy_from_json(const json& j, const std::string& field) {
    const json& atoms_json = j.at("atoms");
    if (!atoms_json.is_array())
        throw json::other_error::create(501, field + ".atoms must be an array", &atoms_json);
    std::vector<Atom> atoms;
    for (size_t n = 0; n < atoms_json.size(); ++n) {
        const std::string atom_field = field + ".atoms[" + std::to_string(n) + "]";
        const json& entry = atoms_json.at(n);
        atoms.push_back({unit_from_json(entry.at("q"), atom_field + ".q"),
                         entry.at("w").get<double>()});
    }
    return MixedStrategy(std::move(atoms), field.c_str());
}

json to_json(const Mat4& m) {
    json rows = json::array();
    for (int r = 0; r < 4; ++r) rows.push_back(json::array({m(r, 0), m(r, 1), m(r, 2), m(r, 3)}));
    return rows;
}

json to_json(const GenericityReport& r) {
    json j{{"generic", r.generic}};
    if (!r.generic) j["witness"] = r.witness;
    return j;
}

json to_json(const GameStats& s) {
    return json{{"mean_X", s.mean_one}, {"mean_Y", s.mean_two}, {"zero_sum", s.zero_sum}};
}

json to_json(const BestResponse& r) {
    json basis = json::array();
    for (const UnitQuaternion& q : r.basis) basis.push_back(to_json(q.value()));
    return json{{"value", r.value}, {"basis", basis}};
}

json to_json(const EquilibriumReport& r) {
    auto violations = [](const std::vector<AtomSlack>& v) {
        json out = json::array();
        for (const AtomSlack& a : v) out.push_back({{"atom", a.index}, {"slack", a.slack}});
        return out;
    };
    return json{{"is_equilibrium", r.is_equilibrium},
                {"payoffs", json::array({r.payoffs.first, r.payoffs.second})},
                {"player_one", json{{"value", r.value_one},
                                    {"slack", r.slack_one},
                                    {"violations", violations(r.violations_one)}}},
                {"player_two", json{{"value", r.value_two},
                                    {"slack", r.slack_two},
                                    {"violations", violations(r.violations_two)}}}};
}

json to_json(const IntertwineWitness& w) {
    return json{{"intertwined", w.intertwined},
                {"degenerate", w.degenerate},
                {"alpha", w.alpha},
                {"coeffs_first", w.coeffs_first},
                {"coeffs_second", w.coeffs_second},
                {"residual", w.residual}};
}

json to_json(const FullIntertwineWitness& w) {
    return json{{"fully_intertwined", w.fully_intertwined},
                {"direct", to_json(w.direct)},
                {"swapped", to_json(w.swapped)}};
}

json to_json(const Classification& c) {
    auto atoms = [](const std::vector<Atom>& list) {
        json out = json::array();
        for (const Atom& a : list) out.push_back({{"q", to_json(a.point.value())}, {"w", a.weight}});
        return out;
    };
    json j{{"type", to_string(c.type)},
           {"translation", to_json(c.translation.value())},
           {"canonical_p1", atoms(c.canonical_nu)},
           {"canonical_p2", atoms(c.canonical_mu)},
           {"report", to_json(c.report)}};
    if (c.intertwine) j["intertwine"] = to_json(*c.intertwine);
    if (c.principal_angles)
        j["principal_angles"] = json::array({(*c.principal_angles)[0], (*c.principal_angles)[1]});
    if (!c.note.empty()) j["note"] = c.note;
    return j;
}

json to_json(const FoundEquilibrium& f) {
    return json{{"p1", to_json(f.nu)},
                {"p2", to_json(f.mu)},
                {"classification", to_json(f.classification)}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError(path, "cannot open file: " + path);
    return json::parse(in); // throws json::parse_error with byte location
}

} // namespace ewlnash::io
