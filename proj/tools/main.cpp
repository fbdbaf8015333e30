#include <CLI11.hpp>

#include <cinttypes>
#include <cstdio>
#include <iostream>
#include <string>

#include "ewlnash/json_io.hpp"
#include "ewlnash/protocol.hpp"
#include "ewlnash/rng.hpp"

using namespace ewlnash;
using io::json;

namespace {

struct Options {
    std::string game_path;
    std::string p1_path;
    std::string p2_path;
    std::string player = "one";
    std::string format = "json";
    uint64_t seed = 0;
    int samples = 1000;
    double tol_eq = kEqTol;
    double tol_equiv = kEquivTol;
};

std::string fmt9(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.9g", v);
    return buf;
}

std::string quat_text(const json& arr) {
    std::string s = "(";
    for (size_t t = 0; t < arr.size(); ++t) {
        if (t) s += ", ";
        s += fmt9(arr[t].get<double>());
    }
    return s + ")";
}

// Human-readable rendering: scalars to 9 significant digits, matrices and
// atom lists row by row.
void print_text(const json& j, const std::string& indent = "") {
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            std::cout << indent << key << ":\n";
            print_text(value, indent + "  ");
        } else if (value.is_array() && !value.empty() && value[0].is_array() &&
                   !value[0].empty() && value[0][0].is_number()) {
            std::cout << indent << key << ":\n";
            for (const auto& row : value) {
                std::cout << indent << " ";
                for (const auto& e : row) std::cout << " " << fmt9(e.get<double>());
                std::cout << "\n";
            }
        } else if (value.is_array() && !value.empty() && value[0].is_object()) {
            std::cout << indent << key << ":\n";
            for (const auto& entry : value) print_text(entry, indent + "  ");
        } else if (value.is_array() && value.size() == 4 && !value.empty() &&
                   value[0].is_number()) {
            std::cout << indent << key << " = " << quat_text(value) << "\n";
        } else if (value.is_number_float()) {
            std::cout << indent << key << " = " << fmt9(value.get<double>()) << "\n";
        } else {
            std::cout << indent << key << " = " << value.dump() << "\n";
        }
    }
}

void emit(const json& report, const Options& opt) {
    if (opt.format == "text")
        print_text(report);
    else
        std::cout << report.dump(2) << "\n";
}

json base_report(const std::string& command) {
    return json{{"schema_version", io::kSchemaVersion}, {"command", command}};
}

Game load_game(const Options& opt) { return io::game_from_json(io::load_file(opt.game_path)); }

MixedStrategy load_strategy(const std::string& path, const char* field) {
    return io::strategy_from_json(io::load_file(path), field);
}

void warn_if_not_generic(const Game& g, json& report) {
    const GenericityReport gen = is_generic(g);
    if (!gen.generic)
        report["warning"] = "game is not generic (" + gen.witness +
                            "); classification theory assumes genericity";
}

int run_payoff(const Options& opt) {
    const Game g = load_game(opt);
    const auto pay = mixed_payoff(g, load_strategy(opt.p1_path, "p1"),
                                  load_strategy(opt.p2_path, "p2"));
    json report = base_report("payoff");
    report["payoffs"] = json::array({pay.first, pay.second});
    emit(report, opt);
    return 0;
}

int run_reduce(const Options& opt) {
    const MixedStrategy reduced = reduce(load_strategy(opt.p1_path, "p1"));
    json report = base_report("reduce");
    report.update(io::to_json(reduced));
    emit(report, opt);
    return 0;
}

int run_equivalent(const Options& opt) {
    const MixedStrategy a = load_strategy(opt.p1_path, "p1");
    const MixedStrategy b = load_strategy(opt.p2_path, "p2");
    json report = base_report("equivalent");
    report["moment_distance"] = moment_distance(a, b);
    report["equivalent"] = equivalent(a, b, opt.tol_equiv);
    emit(report, opt);
    return 0;
}

int run_best_response(const Options& opt) {
    const Game g = load_game(opt);
    const bool for_one = opt.player == "one";
    const std::string opponent_path = for_one ? opt.p2_path : opt.p1_path;
    const MixedStrategy opponent = load_strategy(opponent_path, for_one ? "p2" : "p1");
    const BestResponse r = best_response_set(g, for_one ? Player::One : Player::Two, opponent);
    json report = base_report("best-response");
    report["player"] = opt.player;
    report.update(io::to_json(r));
    report["form"] = io::to_json(payoff_form(g, for_one ? Player::One : Player::Two, opponent).matrix);
    emit(report, opt);
    return 0;
}

int run_verify(const Options& opt) {
    const Game g = load_game(opt);
    const EquilibriumReport r = verify_equilibrium(g, load_strategy(opt.p1_path, "p1"),
                                                   load_strategy(opt.p2_path, "p2"), opt.tol_eq);
    json report = base_report("verify");
    report.update(io::to_json(r));
    emit(report, opt);
    return 0;
}

int run_classify(const Options& opt) {
    const Game g = load_game(opt);
    json report = base_report("classify");
    warn_if_not_generic(g, report);
    const Classification cls = classify(g, load_strategy(opt.p1_path, "p1"),
                                        load_strategy(opt.p2_path, "p2"), opt.tol_eq);
    report.update(io::to_json(cls));
    emit(report, opt);
    return 0;
}

int run_find(const Options& opt) {
    const Game g = load_game(opt);
    json report = base_report("find");
    warn_if_not_generic(g, report);
    json list = json::array();
    for (const FoundEquilibrium& f : find_equilibria(g, opt.seed)) list.push_back(io::to_json(f));
    report["seed"] = opt.seed;
    report["count"] = list.size();
    report["equilibria"] = list;
    emit(report, opt);
    return 0;
}

int run_genericity(const Options& opt) {
    json report = base_report("genericity");
    report.update(io::to_json(is_generic(load_game(opt))));
    emit(report, opt);
    return 0;
}

int run_oracle(const Options& opt) {
    Rng rng(opt.seed);
    double worst = 0.0;
    double worst_opt_out = 0.0;
    double scale_low = 1e300, scale_high = 0.0;
    for (int n = 0; n < opt.samples; ++n) {
        const UnitQuaternion p = rng.unit_quaternion();
        const UnitQuaternion q = rng.unit_quaternion();
        worst = std::max(worst, payoff_rule_deviation(p, q));

        const SU2Matrix u = su2_from_quat(p, Player::One);
        const SU2Matrix v = su2_from_quat(q, Player::Two);
        const AmplitudeVector amps = run_protocol(u, v);
        const Quaternion pq = p.value() * q.value();
        for (int t = 0; t < 4; ++t) {
            if (std::abs(pq.coord(t)) < 1e-3) continue;
            const double ratio = std::abs(amps.alpha[t]) / std::abs(pq.coord(t));
            scale_low = std::min(scale_low, ratio);
            scale_high = std::max(scale_high, ratio);
        }
        const Vec4 probs = opt_out_distribution(u, v);
        for (double e : probs) worst_opt_out = std::max(worst_opt_out, std::abs(e - 0.25));
    }
    json report = base_report("oracle");
    report["samples"] = opt.samples;
    report["seed"] = opt.seed;
    report["max_deviation"] = worst;
    report["opt_out_max_deviation"] = worst_opt_out;
    report["amplitude_scale"] = json::array({scale_low, scale_high});
    report["ok"] = worst <= 1e-10 && worst_opt_out <= 1e-12;
    emit(report, opt);
    return 0;
}

int run_zero_sum_check(const Options& opt) {
    const Game g = load_game(opt);
    const GameStats stats = game_stats(g);
    json report = base_report("zero-sum-check");
    report["zero_sum"] = stats.zero_sum;
    if (!stats.zero_sum) {
        report["note"] = "game is not zero-sum; the exact-payoff statement does not apply";
        emit(report, opt);
        return 0;
    }
    const EquilibriumReport r = verify_equilibrium(g, load_strategy(opt.p1_path, "p1"),
                                                   load_strategy(opt.p2_path, "p2"), opt.tol_eq);
    report["expected_payoffs"] = json::array({stats.mean_one, -stats.mean_one});
    report["payoffs"] = json::array({r.payoffs.first, r.payoffs.second});
    report["is_equilibrium"] = r.is_equilibrium;
    report["ok"] = r.is_equilibrium && std::abs(r.payoffs.first - stats.mean_one) <= 1e-8 &&
                   std::abs(r.payoffs.second + stats.mean_one) <= 1e-8;
    emit(report, opt);
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Mixed-strategy Nash analysis for quaternionic two-by-two quantum games"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* cmd, bool game, bool p1, bool p2) {
        if (game) cmd->add_option("--game", opt.game_path, "game JSON file")->required();
        if (p1) cmd->add_option("--p1", opt.p1_path, "Player One strategy JSON file")->required();
        if (p2) cmd->add_option("--p2", opt.p2_path, "Player Two strategy JSON file")->required();
        cmd->add_option("--format", opt.format, "output format: json|text")
            ->check(CLI::IsMember({"json", "text"}));
        return cmd;
    };

    auto* payoff = add_common(app.add_subcommand("payoff", "expected payoffs of a strategy pair"),
                              true, true, true);
    auto* reduce_cmd = add_common(
        app.add_subcommand("reduce", "equivalent strategy on at most four orthogonal atoms"),
        false, true, false);
    auto* equivalent_cmd = add_common(
        app.add_subcommand("equivalent", "payoff-indistinguishability of two strategies"),
        false, true, true);
    equivalent_cmd->add_option("--tol-equiv", opt.tol_equiv, "moment-matrix tolerance");
    auto* best = add_common(app.add_subcommand("best-response", "best-response value and basis"),
                            true, false, false);
    best->add_option("--player", opt.player, "which player responds: one|two")
        ->check(CLI::IsMember({"one", "two"}));
    best->add_option("--p1", opt.p1_path, "Player One strategy (opponent when --player two)");
    best->add_option("--p2", opt.p2_path, "Player Two strategy (opponent when --player one)");
    auto* verify = add_common(app.add_subcommand("verify", "equilibrium check for a pair"), true,
                              true, true);
    verify->add_option("--tol-eq", opt.tol_eq, "payoff slack tolerance");
    auto* classify_cmd = add_common(app.add_subcommand("classify", "equilibrium type of a pair"),
                                    true, true, true);
    classify_cmd->add_option("--tol-eq", opt.tol_eq, "payoff slack tolerance");
    auto* find = add_common(app.add_subcommand("find", "verified equilibria of the closed families"),
                            true, false, false);
    find->add_option("--seed", opt.seed, "seed for the random frame representatives");
    add_common(app.add_subcommand("genericity", "genericity test with witness"), true, false, false);
    auto* oracle = add_common(
        app.add_subcommand("oracle", "protocol simulation against the quaternion payoff rule"),
        false, false, false);
    oracle->add_option("--samples", opt.samples, "number of sampled strategy pairs")
        ->check(CLI::PositiveNumber);
    oracle->add_option("--seed", opt.seed, "sampling seed");
    auto* zs = add_common(app.add_subcommand("zero-sum-check",
                                             "exact-payoff check for zero-sum equilibria"),
                          true, true, true);
    zs->add_option("--tol-eq", opt.tol_eq, "payoff slack tolerance");

    CLI11_PARSE(app, argc, argv);

    try {
        if (payoff->parsed()) return run_payoff(opt);
        if (reduce_cmd->parsed()) return run_reduce(opt);
        if (equivalent_cmd->parsed()) return run_equivalent(opt);
        if (best->parsed()) {
            const std::string needed = opt.player == "one" ? opt.p2_path : opt.p1_path;
            if (needed.empty())
                throw ValidationError(opt.player == "one" ? "--p2" : "--p1",
                                      "best-response needs the opponent's strategy file");
            return run_best_response(opt);
        }
        if (verify->parsed()) return run_verify(opt);
        if (classify_cmd->parsed()) return run_classify(opt);
        if (find->parsed()) return run_find(opt);
        if (app.get_subcommand("genericity")->parsed()) return run_genericity(opt);
        if (oracle->parsed()) return run_oracle(opt);
        if (zs->parsed()) return run_zero_sum_check(opt);
    } catch (const io::json::parse_error& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const io::json::exception& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ValidationError& e) {
        std::cerr << "validation error at " << e.field() << ": " << e.what() << "\n";
        return 3;
    }
    return 0;
}
