#include "ewlnash/protocol.hpp"

#include <cmath>

namespace ewlnash {

namespace {

// Outcome states in the product basis (H@H, H@T, T@H, T@T), each of squared
// norm 2. Order CC, DD, CD, DC. Player Two's operator acts directly on the
// second factor; this is the convention under which the quaternion weights
// reproduce the protocol probabilities (checked by the 1000-pair oracle).
constexpr std::array<std::array<double, 4>, 4> kOutcomeStates{{
    {1.0, 0.0, 0.0, 1.0},  // CC: H@H + T@T
    {1.0, 0.0, 0.0, -1.0}, // DD: H@H - T@T
    {0.0, 1.0, -1.0, 0.0}, // CD: H@T - T@H
    {0.0, 1.0, 1.0, 0.0},  // DC: H@T + T@H
}};

using State4 = std::array<Complex, 4>;

State4 apply_pair(const SU2Matrix& u, const SU2Matrix& v, const State4& s) {
    // (U @ V) on the product basis, row-major Kronecker indexing.
    State4 r{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) r[2 * a + b] += u(a, c) * v(b, d) * s[2 * c + d];
    return r;
}

} // namespace

double SU2Matrix::unitarity_defect() const {
    double defect = 0.0;
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
            Complex acc = 0.0;
            for (int t = 0; t < 2; ++t) acc += m[r][t] * std::conj(m[c][t]);
            if (r == c) acc -= 1.0;
            defect = std::max(defect, std::abs(acc));
        }
    return defect;
}

void validate_su2(const SU2Matrix& u, const char* field) {
    if (u.unitarity_defect() > 1e-10)
        throw NotUnit(field, std::string(field) + " is not unitary within 1e-10");
    if (std::abs(u.determinant() - Complex{1.0, 0.0}) > 1e-10)
        throw NotUnit(field, std::string(field) + " does not have determinant 1 within 1e-10");
}

SU2Matrix su2_from_quat(const UnitQuaternion& p, Player player) {
    SU2Matrix u;
    if (player == Player::One) {
        // p = A + Bj with A = p1 + p2 i, B = p3 + p4 i, top row (A, B).
        const Complex a{p.coord(0), p.coord(1)};
        const Complex b{p.coord(2), p.coord(3)};
        u.m = {{{a, b}, {-std::conj(b), std::conj(a)}}};
    } else {
        // p = P - jQ: P = p1 + p2 i and, since jQ = conj(Q) j, the j and k
        // coordinates give Q = -p3 + p4 i. Top row (P, Q).
        const Complex pp{p.coord(0), p.coord(1)};
        const Complex qq{-p.coord(2), p.coord(3)};
        u.m = {{{pp, qq}, {-std::conj(qq), std::conj(pp)}}};
    }
    return u;
}

UnitQuaternion quat_from_su2(const SU2Matrix& u, Player player) {
    validate_su2(u);
    const Complex a = u(0, 0);
    const Complex b = u(0, 1);
    if (player == Player::One)
        return UnitQuaternion(Quaternion{a.real(), a.imag(), b.real(), b.imag()});
    return UnitQuaternion(Quaternion{a.real(), a.imag(), -b.real(), b.imag()});
}

Vec4 AmplitudeVector::probabilities() const {
    Vec4 p{};
    double total = 0.0;
    for (int t = 0; t < 4; ++t) {
        p[t] = std::norm(alpha[t]);
        total += p[t];
    }
    for (double& e : p) e /= total;
    return p;
}

AmplitudeVector run_protocol(const SU2Matrix& u, const SU2Matrix& v) {
    validate_su2(u, "U");
    validate_su2(v, "V");

    const State4 entangled{Complex{1.0}, Complex{0.0}, Complex{0.0}, Complex{1.0}};
    const State4 final_state = apply_pair(u, v, entangled);

    AmplitudeVector amps;
    for (int t = 0; t < 4; ++t) {
        Complex coeff = 0.0;
        double basis_norm_sq = 0.0;
        for (int s = 0; s < 4; ++s) {
            coeff += kOutcomeStates[t][s] * final_state[s];
            basis_norm_sq += kOutcomeStates[t][s] * kOutcomeStates[t][s];
        }
        amps.alpha[t] = coeff / basis_norm_sq;
    }

    double residual = 0.0;
    for (int s = 0; s < 4; ++s) {
        Complex rebuilt = 0.0;
        for (int t = 0; t < 4; ++t) rebuilt += amps.alpha[t] * kOutcomeStates[t][s];
        residual = std::max(residual, std::abs(rebuilt - final_state[s]));
    }
    if (residual > 1e-9)
        throw BasisExpansionFailed("outcome basis does not reconstruct the protocol state");
    return amps;
}

double payoff_rule_deviation(const UnitQuaternion& p, const UnitQuaternion& q) {
    const SU2Matrix u = su2_from_quat(p, Player::One);
    const SU2Matrix v = su2_from_quat(q, Player::Two);
    const Vec4 simulated = run_protocol(u, v).probabilities();

    const Quaternion pq = p.value() * q.value();
    double dev = 0.0;
    for (int t = 0; t < 4; ++t)
        dev = std::max(dev, std::abs(simulated[t] - pq.coord(t) * pq.coord(t)));
    return dev;
}

Vec4 opt_out_distribution(const SU2Matrix& u, const SU2Matrix& v,
                          const std::array<Complex, 2>& fresh) {
    validate_su2(u, "U");
    validate_su2(v, "V");

    // Fresh penny through U, normalized.
    std::array<Complex, 2> one_state{};
    double fresh_norm = std::sqrt(std::norm(fresh[0]) + std::norm(fresh[1]));
    for (int r = 0; r < 2; ++r)
        one_state[r] = (u(r, 0) * fresh[0] + u(r, 1) * fresh[1]) / fresh_norm;

    // Player Two's half of the discarded entangled pair is maximally mixed;
    // V (I/2) V* stays I/2, but compute it literally.
    Complex rho_two[2][2] = {};
    for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
            for (int t = 0; t < 2; ++t) rho_two[r][c] += v(r, t) * 0.5 * std::conj(v(c, t));

    // Joint 4x4 density matrix (pure @ mixed).
    Complex rho[4][4];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d)
                    rho[2 * a + b][2 * c + d] = one_state[a] * std::conj(one_state[c]) * rho_two[b][d];

    Vec4 probs{};
    for (int t = 0; t < 4; ++t) {
        // Born probability against the unit-normalized outcome state.
        Complex acc = 0.0;
        for (int r = 0; r < 4; ++r)
            for (int c = 0; c < 4; ++c)
                acc += (kOutcomeStates[t][r] / std::sqrt(2.0)) * rho[r][c] *
                       (kOutcomeStates[t][c] / std::sqrt(2.0));
        probs[t] = acc.real();
    }
    return probs;
}

} // namespace ewlnash
