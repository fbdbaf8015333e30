#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ewlnash/equilibrium.hpp"
#include "ewlnash/json_io.hpp"
#include "ewlnash/protocol.hpp"
#include "ewlnash/rng.hpp"

namespace py = pybind11;
using namespace ewlnash;

namespace {

UnitQuaternion unit_from_seq(const std::array<double, 4>& c) {
    return UnitQuaternion(Quaternion::from_coords(c));
}

Game game_from_pairs(const std::array<std::pair<double, double>, 4>& pairs) {
    std::array<PayoffPair, 4> table;
    for (int t = 0; t < 4; ++t) table[t] = {pairs[t].first, pairs[t].second};
    return Game(table);
}

std::vector<std::pair<std::array<double, 4>, double>> atoms_out(const MixedStrategy& s) {
    std::vector<std::pair<std::array<double, 4>, double>> out;
    for (const Atom& a : s.atoms()) out.emplace_back(a.point.coords(), a.weight);
    return out;
}

std::array<std::array<double, 4>, 4> mat_out(const Mat4& m) {
    std::array<std::array<double, 4>, 4> out;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c) out[r][c] = m(r, c);
    return out;
}

} // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Quaternionic two-by-two quantum games: payoffs, strategy reduction, "
              "best responses, Nash equilibrium verification and classification.";

    py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

    py::class_<Quaternion>(m, "Quaternion")
        .def(py::init<double, double, double, double>(), py::arg("w"), py::arg("x"), py::arg("y"),
             py::arg("z"))
        .def_readonly("w", &Quaternion::w)
        .def_readonly("x", &Quaternion::x)
        .def_readonly("y", &Quaternion::y)
        .def_readonly("z", &Quaternion::z)
        .def("coords", &Quaternion::coords)
        .def("conjugate", &Quaternion::conjugate)
        .def("norm", &Quaternion::norm)
        .def("__mul__",
             [](const Quaternion& a, const Quaternion& b) { return a * b; })
        .def("__repr__", [](const Quaternion& q) {
            return "Quaternion(" + std::to_string(q.w) + ", " + std::to_string(q.x) + ", " +
                   std::to_string(q.y) + ", " + std::to_string(q.z) + ")";
        });

    py::class_<UnitQuaternion>(m, "UnitQuaternion")
        .def(py::init(&unit_from_seq), py::arg("coords"))
        .def(py::init([](double w, double x, double y, double z) {
                 return UnitQuaternion(Quaternion{w, x, y, z});
             }),
             py::arg("w"), py::arg("x"), py::arg("y"), py::arg("z"))
        .def("coords", &UnitQuaternion::coords)
        .def("inverse", &UnitQuaternion::inverse)
        .def("__mul__",
             [](const UnitQuaternion& a, const UnitQuaternion& b) { return a * b; })
        .def("__repr__", [](const UnitQuaternion& q) {
            return "UnitQuaternion(" + std::to_string(q.coord(0)) + ", " +
                   std::to_string(q.coord(1)) + ", " + std::to_string(q.coord(2)) + ", " +
                   std::to_string(q.coord(3)) + ")";
        });

    m.def("k_function", [](const Quaternion& q) { return k_function(q); },
          "Product of the four coordinates.");

    py::class_<Game>(m, "Game")
        .def(py::init(&game_from_pairs), py::arg("payoffs"),
             "Four (X, Y) payoff pairs in outcome order CC, DD, CD, DC.")
        .def("payoffs_one", &Game::payoffs_one)
        .def("payoffs_two", &Game::payoffs_two)
        .def("to_json", [](const Game& g) { return io::to_json(g).dump(); })
        .def_static("from_json",
                    [](const std::string& text) { return io::game_from_json(io::json::parse(text)); });

    m.def("is_generic", [](const Game& g) {
        const GenericityReport r = is_generic(g);
        return std::make_pair(r.generic, r.witness);
    });
    m.def("quantum_payoff", &quantum_payoff, py::arg("game"), py::arg("p"), py::arg("q"));
    m.def("game_stats", [](const Game& g) {
        const GameStats s = game_stats(g);
        py::dict d;
        d["mean_X"] = s.mean_one;
        d["mean_Y"] = s.mean_two;
        d["zero_sum"] = s.zero_sum;
        return d;
    });

    py::class_<MixedStrategy>(m, "MixedStrategy")
        .def(py::init([](const std::vector<std::pair<std::array<double, 4>, double>>& atoms) {
                 std::vector<Atom> list;
                 for (const auto& [coords, w] : atoms) list.push_back({unit_from_seq(coords), w});
                 return MixedStrategy(std::move(list));
             }),
             py::arg("atoms"), "List of (coords, weight) atoms; weights must sum to 1.")
        .def_static("point_mass", &MixedStrategy::point_mass)
        .def("atoms", &atoms_out)
        .def("__len__", &MixedStrategy::size)
        .def("to_json", [](const MixedStrategy& s) { return io::to_json(s).dump(); })
        .def_static("from_json", [](const std::string& text) {
            return io::strategy_from_json(io::json::parse(text));
        });

    m.def("second_moment", [](const MixedStrategy& s) { return mat_out(second_moment(s)); });
    m.def("moment_distance", &moment_distance);
    m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"), py::arg("tol") = kEquivTol);
    m.def("reduce", &reduce);
    m.def("translate",
          [](const MixedStrategy& s, const UnitQuaternion& u, const std::string& side) {
              return translate(s, u, side == "left" ? Side::Left : Side::Right);
          },
          py::arg("strategy"), py::arg("u"), py::arg("side") = "right");
    m.def("mixed_payoff", &mixed_payoff, py::arg("game"), py::arg("p1"), py::arg("p2"));

    m.def("best_response_set",
          [](const Game& g, const std::string& player, const MixedStrategy& opponent) {
              const BestResponse r =
                  best_response_set(g, player == "one" ? Player::One : Player::Two, opponent);
              std::vector<std::array<double, 4>> basis;
              for (const UnitQuaternion& b : r.basis) basis.push_back(b.coords());
              return std::make_pair(r.value, basis);
          },
          py::arg("game"), py::arg("player"), py::arg("opponent"));
    m.def("k_constraint",
          [](const Vec4& probs, const std::array<std::array<double, 4>, 4>& frame,
             const UnitQuaternion& p) {
              return k_constraint(probs,
                                  OrthoFrame(unit_from_seq(frame[0]), unit_from_seq(frame[1]),
                                             unit_from_seq(frame[2]), unit_from_seq(frame[3])),
                                  p);
          },
          py::arg("probs"), py::arg("frame"), py::arg("p"));

    py::class_<EquilibriumReport>(m, "EquilibriumReport")
        .def_readonly("is_equilibrium", &EquilibriumReport::is_equilibrium)
        .def_readonly("slack_one", &EquilibriumReport::slack_one)
        .def_readonly("slack_two", &EquilibriumReport::slack_two)
        .def_readonly("value_one", &EquilibriumReport::value_one)
        .def_readonly("value_two", &EquilibriumReport::value_two)
        .def_readonly("payoffs", &EquilibriumReport::payoffs)
        .def("__repr__", [](const EquilibriumReport& r) {
            return std::string("EquilibriumReport(is_equilibrium=") +
                   (r.is_equilibrium ? "True" : "False") + ")";
        });

    py::class_<Classification>(m, "Classification")
        .def_property_readonly("type",
                               [](const Classification& c) { return std::string(to_string(c.type)); })
        .def_readonly("report", &Classification::report)
        .def_property_readonly("translation",
                               [](const Classification& c) { return c.translation.coords(); })
        .def_property_readonly("principal_angles",
                               [](const Classification& c) { return c.principal_angles; })
        .def("to_json", [](const Classification& c) { return io::to_json(c).dump(); })
        .def("__repr__", [](const Classification& c) {
            return std::string("Classification(type='") + to_string(c.type) + "')";
        });

    m.def("verify_equilibrium", &verify_equilibrium, py::arg("game"), py::arg("p1"), py::arg("p2"),
          py::arg("tol") = kEqTol);
    m.def("classify", &classify, py::arg("game"), py::arg("p1"), py::arg("p2"),
          py::arg("tol") = kEqTol);
    m.def("canonicalize_pair", [](const MixedStrategy& nu, const MixedStrategy& mu) {
        const CanonicalPair c = canonicalize_pair(nu, mu);
        return std::make_tuple(c.nu, c.mu, c.u.coords());
    });
    m.def("intertwined",
          [](const Quaternion& p, const Quaternion& q, const Quaternion& r, const Quaternion& s) {
              const IntertwineWitness w = intertwined(p, q, r, s);
              py::dict d;
              d["intertwined"] = w.intertwined;
              d["degenerate"] = w.degenerate;
              d["alpha"] = w.alpha;
              d["residual"] = w.residual;
              return d;
          });
    m.def("find_equilibria",
          [](const Game& g, uint64_t seed) {
              std::vector<std::tuple<MixedStrategy, MixedStrategy, Classification>> out;
              for (const FoundEquilibrium& f : find_equilibria(g, seed))
                  out.emplace_back(f.nu, f.mu, f.classification);
              return out;
          },
          py::arg("game"), py::arg("seed") = 0);

    m.def("payoff_rule_deviation", &payoff_rule_deviation, py::arg("p"), py::arg("q"),
          "Max disagreement between the simulated protocol distribution and the "
          "squared coordinates of p*q.");
    m.def("opt_out_distribution",
          [](const UnitQuaternion& p, const UnitQuaternion& q) {
              return opt_out_distribution(su2_from_quat(p, Player::One),
                                          su2_from_quat(q, Player::Two));
          },
          py::arg("p"), py::arg("q"),
          "Outcome distribution when Player One swaps in an unentangled penny.");

    m.attr("__version__") = "0.1.0";
}
