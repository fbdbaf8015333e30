#include "ewlnash/game.hpp"

#include <cmath>

namespace ewlnash {

Game::Game(const std::array<PayoffPair, 4>& by_outcome) : table_(by_outcome) {
    for (int t = 0; t < 4; ++t)
        if (!std::isfinite(table_[t].to_one) || !std::isfinite(table_[t].to_two))
            throw ValidationError(std::string("payoffs.") + kOutcomeNames[t],
                                  "payoffs must be finite");
}

Vec4 Game::payoffs_one() const {
    return {table_[0].to_one, table_[1].to_one, table_[2].to_one, table_[3].to_one};
}

Vec4 Game::payoffs_two() const {
    return {table_[0].to_two, table_[1].to_two, table_[2].to_two, table_[3].to_two};
}

namespace {

// Values distinct and twofold sums distinct for one player; names use the
// given letter ("X" or "Y") with 1-based outcome indices.
bool player_generic(const Vec4& v, char letter, double tol, std::string& witness) {
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (std::abs(v[a] - v[b]) <= tol) {
                witness = std::string(1, letter) + std::to_string(a + 1) + " = " + letter +
                          std::to_string(b + 1);
                return false;
            }
    struct Sum {
        double value;
        int a, b;
    };
    std::array<Sum, 6> sums;
    int n = 0;
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b) sums[n++] = {v[a] + v[b], a, b};
    for (int s = 0; s < 6; ++s)
        for (int t = s + 1; t < 6; ++t)
            if (std::abs(sums[s].value - sums[t].value) <= tol) {
                witness = std::string(1, letter) + std::to_string(sums[s].a + 1) + " + " + letter +
                          std::to_string(sums[s].b + 1) + " = " + letter +
                          std::to_string(sums[t].a + 1) + " + " + letter +
                          std::to_string(sums[t].b + 1);
                return false;
            }
    return true;
}

} // namespace

GenericityReport is_generic(const Game& g, double tol) {
    GenericityReport report;
    if (!player_generic(g.payoffs_one(), 'X', tol, report.witness)) return report;
    if (!player_generic(g.payoffs_two(), 'Y', tol, report.witness)) return report;
    report.generic = true;
    return report;
}

std::pair<double, double> quantum_payoff(const Game& g, const UnitQuaternion& p,
                                         const UnitQuaternion& q) {
    const Quaternion pq = p.value() * q.value();
    double one = 0.0, two = 0.0;
    for (int t = 0; t < 4; ++t) {
        const double weight = pq.coord(t) * pq.coord(t);
        one += weight * g.at(t).to_one;
        two += weight * g.at(t).to_two;
    }
    return {one, two};
}

GameStats game_stats(const Game& g) {
    GameStats s;
    bool zero = true;
    for (int t = 0; t < 4; ++t) {
        s.mean_one += g.at(t).to_one / 4.0;
        s.mean_two += g.at(t).to_two / 4.0;
        if (std::abs(g.at(t).to_one + g.at(t).to_two) > 1e-12) zero = false;
    }
    s.zero_sum = zero;
    return s;
}

} // namespace ewlnash
