#pragma once

#include <array>
#include <string>
#include <utility>

#include "ewlnash/quaternion.hpp"

namespace ewlnash {

inline constexpr double kGenericTol = 1e-9;

/// Outcome labels in the fixed internal order 1:CC, 2:DD, 3:CD, 4:DC. The
/// t-th squared quaternion coordinate of p*q weights the t-th outcome, so DD
/// pairs with the i coordinate, CD with j, DC with k.
enum class Outcome : int { CC = 0, DD = 1, CD = 2, DC = 3 };

inline constexpr std::array<const char*, 4> kOutcomeNames{"CC", "DD", "CD", "DC"};

struct PayoffPair {
    double to_one = 0.0;
    double to_two = 0.0;
};

/// A two-by-two game given by its four payoff pairs.
class Game {
public:
    explicit Game(const std::array<PayoffPair, 4>& by_outcome);

    const PayoffPair& at(Outcome t) const { return table_[static_cast<int>(t)]; }
    const PayoffPair& at(int t) const { return table_[t]; }

    /// Player One's payoffs (X_1..X_4) in outcome order.
    Vec4 payoffs_one() const;
    /// Player Two's payoffs (Y_1..Y_4) in outcome order.
    Vec4 payoffs_two() const;

private:
    std::array<PayoffPair, 4> table_;
};

/// Verdict of the genericity test; on failure, `witness` names the colliding
/// pair (for example "X1 + X4 = X2 + X3").
struct GenericityReport {
    bool generic = false;
    std::string witness;
};

/// A game is generic when each player's four payoffs are pairwise distinct
/// and the six twofold sums of them are pairwise distinct, all separated by
/// more than tol.
GenericityReport is_generic(const Game& g, double tol = kGenericTol);

/// Payoffs of the quantized game for pure strategies p, q: the outcome
/// weights are the squared coordinates of p*q.
std::pair<double, double> quantum_payoff(const Game& g, const UnitQuaternion& p,
                                         const UnitQuaternion& q);

struct GameStats {
    double mean_one = 0.0;
    double mean_two = 0.0;
    bool zero_sum = false;
};

GameStats game_stats(const Game& g);

} // namespace ewlnash
