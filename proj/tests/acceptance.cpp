// Acceptance suite: one pass/fail line per criterion, exit code = number of
// failures. Criterion 10 shells out to the CLI, whose path is passed with
// --cli (wired up by ctest).

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ewlnash/equilibrium.hpp"
#include "ewlnash/json_io.hpp"
#include "ewlnash/protocol.hpp"
#include "ewlnash/rng.hpp"

using namespace ewlnash;

namespace {

std::string g_cli_path;

Game make_game(const Vec4& x, const Vec4& y) {
    return Game({PayoffPair{x[0], y[0]}, PayoffPair{x[1], y[1]}, PayoffPair{x[2], y[2]},
                 PayoffPair{x[3], y[3]}});
}

const OrthoFrame kStdFrame(UnitQuaternion::basis(0), UnitQuaternion::basis(1),
                           UnitQuaternion::basis(2), UnitQuaternion::basis(3));

double elapsed_seconds(const std::chrono::steady_clock::time_point& start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::string sci(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

bool criterion_1(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(1001);
    double worst = 0.0;
    for (int n = 0; n < 1000; ++n)
        worst = std::max(worst, payoff_rule_deviation(rng.unit_quaternion(), rng.unit_quaternion()));
    const double secs = elapsed_seconds(start);
    detail = "max deviation " + sci(worst) + ", " + sci(secs) + " s";
    return worst <= 1e-10 && secs < 1.0;
}

bool criterion_2(std::string& detail) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(1002);
    double worst_moment = 0.0;
    for (int n = 0; n < 200; ++n) {
        const MixedStrategy mu = rng.strategy(50);
        const MixedStrategy r = reduce(mu);
        if (r.size() > 4) {
            detail = "reduce produced " + std::to_string(r.size()) + " atoms";
            return false;
        }
        for (size_t a = 0; a < r.size(); ++a)
            for (size_t b = a + 1; b < r.size(); ++b)
                if (std::abs(inner(r.atoms()[a].point, r.atoms()[b].point)) > kOrthoTol) {
                    detail = "reduced atoms not orthogonal";
                    return false;
                }
        worst_moment = std::max(worst_moment, moment_distance(mu, r));
    }
    const double secs = elapsed_seconds(start);
    detail = "max moment distance " + sci(worst_moment) + ", " + sci(secs) +
             " s";
    return worst_moment <= 1e-9 && secs < 1.0;
}

bool criterion_3(std::string& detail) {
    Rng rng(1003);
    double worst_excess = -1e300;
    double worst_basis = 0.0;
    for (int n = 0; n < 200; ++n) {
        const Game g = rng.game();
        const MixedStrategy mu = rng.strategy(8);
        const PayoffForm form = payoff_form(g, Player::One, mu);
        const BestResponse r = best_response_set(g, Player::One, mu);
        for (const UnitQuaternion& b : r.basis)
            worst_basis = std::max(worst_basis, std::abs(quad_form(form.matrix, b.coords()) - r.value));
        for (int s = 0; s < 1000; ++s) {
            const UnitQuaternion p = rng.unit_quaternion();
            worst_excess = std::max(worst_excess, quad_form(form.matrix, p.coords()) - r.value);
        }
    }
    detail = "max sample excess " + sci(worst_excess) + ", max basis gap " +
             sci(worst_basis);
    return worst_excess <= 1e-9 && worst_basis <= 1e-9;
}

bool criterion_4(std::string& detail) {
    Rng rng(1004);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const Game g = rng.generic_game();
        const OrthoFrame frame = rng.frame();
        // Distinct probabilities, freshly scrambled each round.
        Vec4 probs{0.4, 0.3, 0.2, 0.1};
        for (int t = 3; t > 0; --t) std::swap(probs[t], probs[static_cast<int>(rng.uniform() * (t + 1))]);
        std::vector<Atom> atoms;
        for (int t = 0; t < 4; ++t) atoms.push_back({frame[t], probs[t]});
        const BestResponse r = best_response_set(g, Player::One, MixedStrategy(std::move(atoms)));
        for (const UnitQuaternion& p : r.basis)
            worst = std::max(worst, std::abs(k_constraint(probs, frame, p)));
    }
    for (int n = 0; n < 100; ++n) {
        const double flat = k_constraint({0.25, 0.25, 0.25, 0.25}, rng.frame(), rng.unit_quaternion());
        if (flat != 0.0) {
            detail = "equal-probability constraint not exactly zero";
            return false;
        }
    }
    detail = "max |constraint| " + sci(worst);
    return worst <= 1e-8;
}

bool criterion_5(std::string& detail) {
    Rng rng(1005);
    double worst_margin = 1e300;
    for (int n = 0; n < 1000; ++n) {
        const Game g = rng.game();
        const MixedStrategy mu = rng.strategy(6);
        const Vec4 x = g.payoffs_one();
        const double bound = (x[0] + x[1] + x[2] + x[3]) / 4;
        worst_margin = std::min(worst_margin,
                                best_response_set(g, Player::One, mu).value - bound);
    }
    detail = "min (value - mean) " + sci(worst_margin);
    return worst_margin >= -1e-9;
}

bool criterion_6(std::string& detail) {
    Rng rng(1006);
    double worst = 0.0;
    int total = 0;
    for (int n = 0; n < 50; ++n) {
        const Game g = rng.generic_zero_sum_game();
        const double mean = game_stats(g).mean_one;
        for (const FoundEquilibrium& f : find_equilibria(g, n)) {
            const auto pay = mixed_payoff(g, f.nu, f.mu);
            worst = std::max({worst, std::abs(pay.first - mean), std::abs(pay.second + mean)});
            ++total;
        }
    }
    detail = std::to_string(total) + " equilibria, max payoff deviation " + sci(worst);
    return total > 0 && worst <= 1e-8;
}

bool criterion_7(std::string& detail) {
    Rng rng(1007);
    for (int n = 0; n < 50; ++n) {
        const Game g = rng.generic_game();
        const auto [nu, mu] = translated_pair(MixedStrategy::uniform(kStdFrame),
                                              MixedStrategy::uniform(kStdFrame),
                                              rng.unit_quaternion());
        const Classification cls = classify(g, nu, mu);
        if (!cls.report.is_equilibrium || cls.type != EquilibriumType::A) {
            detail = "uniform-frame pair did not classify as type a";
            return false;
        }
    }

    const Game cc_dominant = make_game({5, 3, 1, 0}, {4, 2, 0, -1});
    const Classification pure =
        classify(cc_dominant, MixedStrategy::point_mass(UnitQuaternion::one()),
                 MixedStrategy::point_mass(UnitQuaternion::one()));
    if (!pure.report.is_equilibrium || pure.type != EquilibriumType::E) {
        detail = "pure cooperative pair did not classify as type e";
        return false;
    }

    const UnitQuaternion u = UnitQuaternion::basis(1);
    const UnitQuaternion p(Quaternion{std::cos(0.7), std::sin(0.7), 0, 0});
    const MixedStrategy mu_d({Atom{UnitQuaternion::one(), 0.5}, Atom{u, 0.5}});
    const MixedStrategy nu_d({Atom{p, 0.5}, Atom{p * u, 0.5}});
    if (!verify_equilibrium(cc_dominant, nu_d, mu_d).is_equilibrium) {
        detail = "equal-weight two-point construction did not verify";
        return false;
    }
    const Classification two_point = classify(cc_dominant, nu_d, mu_d);
    if (two_point.type != EquilibriumType::D) {
        detail = std::string("two-point construction classified as ") + to_string(two_point.type);
        return false;
    }

    const Quaternion pp{1, 2, 3, 4};
    const Quaternion qq{4, 3, 2, 1};
    if (!intertwined(pp, qq, 2.0 * pp, 2.0 * qq).intertwined) {
        detail = "scaled pair not recognized as intertwined";
        return false;
    }
    detail = "type a x50, type e, type d, scaled intertwining all hold";
    return true;
}

bool criterion_8(std::string& detail) {
    Rng rng(1008);
    double worst_slack_gap = 0.0;
    for (int n = 0; n < 100; ++n) {
        // Alternate genuine equilibria and arbitrary candidate pairs.
        MixedStrategy nu = (n % 2 == 0) ? MixedStrategy::uniform(kStdFrame) : rng.strategy(4);
        MixedStrategy mu = (n % 2 == 0) ? MixedStrategy::uniform(kStdFrame) : rng.strategy(4);
        const Game g = rng.game();
        const UnitQuaternion u = rng.unit_quaternion();
        const EquilibriumReport before = verify_equilibrium(g, nu, mu);
        const auto [tnu, tmu] = translated_pair(nu, mu, u);
        const EquilibriumReport after = verify_equilibrium(g, tnu, tmu);
        if (before.is_equilibrium != after.is_equilibrium) {
            detail = "verdict changed under translation";
            return false;
        }
        worst_slack_gap = std::max({worst_slack_gap, std::abs(before.slack_one - after.slack_one),
                                    std::abs(before.slack_two - after.slack_two)});
    }
    detail = "max slack disagreement " + sci(worst_slack_gap);
    return worst_slack_gap <= 1e-9;
}

bool criterion_9(std::string& detail) {
    Rng rng(1009);
    double worst = 0.0;
    for (int n = 0; n < 100; ++n) {
        const Vec4 probs = opt_out_distribution(su2_from_quat(rng.unit_quaternion(), Player::One),
                                                su2_from_quat(rng.unit_quaternion(), Player::Two));
        for (double e : probs) worst = std::max(worst, std::abs(e - 0.25));
    }
    detail = "max deviation from 1/4: " + sci(worst);
    return worst <= 1e-12;
}

std::string run_command(const std::string& cmd, int& status) {
    std::string output;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        status = -1;
        return output;
    }
    char buf[4096];
    size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) output.append(buf, got);
    status = pclose(pipe);
    return output;
}

bool criterion_10(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "CLI path not supplied (--cli)";
        return false;
    }
    const std::string game_path = "acceptance_determinism_game.json";
    {
        std::ofstream out(game_path);
        out << io::to_json(make_game({3, 1, 0, 5}, {3, 1, 5, 0})).dump();
    }
    const std::string cmd = g_cli_path + " find --game " + game_path + " --seed 7";
    int status1 = 0, status2 = 0;
    const std::string first = run_command(cmd, status1);
    const std::string second = run_command(cmd, status2);
    std::remove(game_path.c_str());
    if (status1 != 0 || status2 != 0) {
        detail = "CLI exited with nonzero status";
        return false;
    }
    if (first.empty() || first != second) {
        detail = "outputs differ between runs";
        return false;
    }
    detail = std::to_string(first.size()) + " identical bytes";
    return true;
}

} // namespace

int main(int argc, char** argv) {
    for (int a = 1; a + 1 < argc; ++a)
        if (std::string(argv[a]) == "--cli") g_cli_path = argv[a + 1];

    const std::vector<std::pair<std::string, std::function<bool(std::string&)>>> criteria{
        {"protocol simulation matches the quaternion outcome weights (1000 pairs, <= 1e-10)",
         criterion_1},
        {"reduction to <= 4 orthogonal atoms stays equivalent (200 strategies, <= 1e-9)",
         criterion_2},
        {"best-response value is the sphere maximum and its basis attains it (<= 1e-9)",
         criterion_3},
        {"K-constraint vanishes at best responses on 4-frames (<= 1e-8; exact 0 for equal probs)",
         criterion_4},
        {"best-response value is at least the payoff mean (1000 cases, >= -1e-9)", criterion_5},
        {"zero-sum equilibria from find pay exactly the outcome mean (50 games, <= 1e-8)",
         criterion_6},
        {"classification coverage: types a, e, d and scaled intertwining", criterion_7},
        {"translation invariance of verification (100 pairs, slacks <= 1e-9)", criterion_8},
        {"opting out yields the uniform distribution (100 pairs, <= 1e-12)", criterion_9},
        {"find --seed 7 is byte-identical across runs", criterion_10},
    };

    int failures = 0;
    for (size_t n = 0; n < criteria.size(); ++n) {
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[n].second(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        if (!ok) ++failures;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << n + 1 << ". " << criteria[n].first;
        if (!detail.empty()) std::cout << " — " << detail;
        std::cout << "\n";
    }
    if (failures) std::cout << failures << " criterion(s) failed\n";
    return failures;
}
