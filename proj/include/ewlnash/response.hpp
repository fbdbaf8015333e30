#pragma once

#include <vector>

#include "ewlnash/strategy.hpp"

namespace ewlnash {

inline constexpr double kClusterTolBase = 1e-8; // relative eigenvalue-multiplicity threshold

enum class Player { One, Two };

/// The quadratic form p -> expected payoff of `player` for pure p against a
/// fixed opponent strategy. lambda_max is filled from the decomposition.
struct PayoffForm {
    Mat4 matrix;
    Player player = Player::One;
    double lambda_max = 0.0;
};

/// Spectral data of a symmetric 4x4 matrix: eigenvalues descending,
/// orthonormal eigenvectors with the first nonzero coordinate positive, and
/// index clusters of equal eigenvalues (|l_i - l_j| <= 1e-8 * (1 + |l_1|)).
struct EigenDecomposition {
    Vec4 values{};
    std::array<Vec4, 4> vectors{};
    std::vector<std::vector<int>> clusters;
};

EigenDecomposition eigen_sym4(const Mat4& sym);

/// For Player One the form is sum_atoms w * R_q^T diag(X) R_q over the
/// opponent's atoms q (R_q the right-multiplication matrix); for Player Two,
/// sum w * L_p^T diag(Y) L_p over the opponent's atoms p.
PayoffForm payoff_form(const Game& g, Player player, const MixedStrategy& opponent);

/// The optimal-response set: the unit sphere intersected with the top
/// eigenspace of the payoff form. `value` is the attained payoff, `basis` an
/// orthonormal basis of that eigenspace.
struct BestResponse {
    double value = 0.0;
    std::vector<UnitQuaternion> basis;
};

BestResponse best_response_set(const Game& g, Player player, const MixedStrategy& opponent);

/// Left-hand side of the optimal-response constraint for a strategy supported
/// on the frame q_1..q_4 with probabilities probs: the sum over s of
/// prod_{t != s} (probs_s - probs_t) * K(p * q_s). Zero at every optimal
/// response when the relevant payoffs are not all equal.
double k_constraint(const Vec4& probs, const OrthoFrame& support, const UnitQuaternion& p);

} // namespace ewlnash
