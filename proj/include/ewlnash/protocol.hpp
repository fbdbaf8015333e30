#pragma once

#include <array>
#include <complex>

#include "ewlnash/quaternion.hpp"
#include "ewlnash/response.hpp"

namespace ewlnash {

using Complex = std::complex<double>;

/// 2x2 special-unitary matrix: a player's physical move.
struct SU2Matrix {
    std::array<std::array<Complex, 2>, 2> m{};

    Complex operator()(int r, int c) const { return m[r][c]; }

    static SU2Matrix identity() {
        SU2Matrix u;
        u.m[0][0] = 1.0;
        u.m[1][1] = 1.0;
        return u;
    }

    /// Largest deviation from U U* = I.
    double unitarity_defect() const;
    Complex determinant() const { return m[0][0] * m[1][1] - m[0][1] * m[1][0]; }
};

/// Checks unitarity and det = 1 within 1e-10; throws NotUnit otherwise.
void validate_su2(const SU2Matrix& u, const char* field = "matrix");

/// The operator a player's quaternion strategy stands for. Player One's
/// identification sends top row (A, B) to A + Bj; Player Two's sends top row
/// (P, Q) to P - jQ. Both are inverted here.
SU2Matrix su2_from_quat(const UnitQuaternion& p, Player player);

/// Inverse of su2_from_quat; validates the input is special-unitary.
UnitQuaternion quat_from_su2(const SU2Matrix& u, Player player);

/// Expansion coefficients of the final protocol state in the orthogonal
/// outcome basis (order CC, DD, CD, DC).
struct AmplitudeVector {
    std::array<Complex, 4> alpha{};

    /// Outcome probabilities |alpha_t|^2 / sum_s |alpha_s|^2.
    Vec4 probabilities() const;
};

/// Runs the two-penny protocol: prepares H@H + T@T, applies U to the first
/// factor and V to the second, and expands the result in the outcome states
/// CC = H@H + T@T, DD = H@H - T@T, CD = H@T - T@H, DC = H@T + T@H.
/// Throws BasisExpansionFailed if the expansion does not reconstruct the
/// state within 1e-9 (which would signal a convention bug).
AmplitudeVector run_protocol(const SU2Matrix& u, const SU2Matrix& v);

/// Max over outcomes of | protocol probability - pi_t(p q)^2 |: the
/// disagreement between the simulated physical protocol and the quaternion
/// payoff weights. Zero up to round-off.
double payoff_rule_deviation(const UnitQuaternion& p, const UnitQuaternion& q);

/// Outcome distribution when Player One discards the entangled penny for a
/// fresh unentangled one (density-matrix computation): uniform (1/4 each)
/// regardless of U, V and of the fresh state.
Vec4 opt_out_distribution(const SU2Matrix& u, const SU2Matrix& v,
                          const std::array<Complex, 2>& fresh = {Complex{1.0, 0.0},
                                                                 Complex{0.0, 0.0}});

} // namespace ewlnash
