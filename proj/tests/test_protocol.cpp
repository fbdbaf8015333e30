#include <doctest.h>

#include <cmath>

#include "ewlnash/protocol.hpp"
#include "test_support.hpp"

using namespace ewlnash;

namespace {

double max_abs_diff(const Vec4& a, const Vec4& b) {
    double r = 0.0;
    for (int t = 0; t < 4; ++t) r = std::max(r, std::abs(a[t] - b[t]));
    return r;
}

} // namespace

TEST_CASE("su2_from_quat examples") {
    SUBCASE("1 maps to the identity operator") {
        const SU2Matrix u = su2_from_quat(UnitQuaternion::one(), Player::One);
        CHECK(std::abs(u(0, 0) - Complex{1, 0}) <= 1e-15);
        CHECK(std::abs(u(0, 1)) <= 1e-15);
        CHECK(std::abs(u(1, 0)) <= 1e-15);
        CHECK(std::abs(u(1, 1) - Complex{1, 0}) <= 1e-15);
    }
    SUBCASE("j maps to the flip operator for Player One") {
        // Top row (0, 1), bottom row (-1, 0).
        const SU2Matrix u = su2_from_quat(UnitQuaternion::basis(2), Player::One);
        CHECK(std::abs(u(0, 0)) <= 1e-15);
        CHECK(std::abs(u(0, 1) - Complex{1, 0}) <= 1e-15);
        CHECK(std::abs(u(1, 0) - Complex{-1, 0}) <= 1e-15);
        CHECK(std::abs(u(1, 1)) <= 1e-15);
    }
    SUBCASE("the flip operator maps to -j for Player Two") {
        SU2Matrix flip;
        flip.m = {{{Complex{0, 0}, Complex{1, 0}}, {Complex{-1, 0}, Complex{0, 0}}}};
        const UnitQuaternion q = quat_from_su2(flip, Player::Two);
        CHECK(testing::max_coord_diff(q.value(), -Quaternion::j()) <= 1e-15);
    }
    SUBCASE("random units are special-unitary and round-trip") {
        Rng rng(61);
        for (int n = 0; n < 100; ++n) {
            const UnitQuaternion p = rng.unit_quaternion();
            for (Player player : {Player::One, Player::Two}) {
                const SU2Matrix u = su2_from_quat(p, player);
                CHECK(u.unitarity_defect() <= 1e-12);
                CHECK(std::abs(u.determinant() - Complex{1, 0}) <= 1e-12);
                const UnitQuaternion back = quat_from_su2(u, player);
                CHECK(testing::max_coord_diff(back.value(), p.value()) <= 1e-12);
            }
        }
    }
    SUBCASE("Player One's identification is a homomorphism") {
        Rng rng(62);
        for (int n = 0; n < 50; ++n) {
            const UnitQuaternion p = rng.unit_quaternion();
            const UnitQuaternion q = rng.unit_quaternion();
            const SU2Matrix lhs = su2_from_quat(p * q, Player::One);
            const SU2Matrix up = su2_from_quat(p, Player::One);
            const SU2Matrix uq = su2_from_quat(q, Player::One);
            for (int r = 0; r < 2; ++r)
                for (int c = 0; c < 2; ++c) {
                    Complex prod = 0.0;
                    for (int t = 0; t < 2; ++t) prod += up(r, t) * uq(t, c);
                    CHECK(std::abs(lhs(r, c) - prod) <= 1e-12);
                }
        }
    }
}

TEST_CASE("outcome states are mutually orthogonal and arise from unit plays") {
    // Computed, not assumed: outcome t is the image of the entangled state
    // under Player One applying the operator identified with the t-th
    // quaternion unit. Apply U to the first tensor factor by hand and check
    // the four images are mutually orthogonal in C^4.
    std::array<std::array<Complex, 4>, 4> states;
    for (int t = 0; t < 4; ++t) {
        const SU2Matrix u = su2_from_quat(UnitQuaternion::basis(t), Player::One);
        // (U x I)(H@H + T@T) in basis (HH, HT, TH, TT).
        states[t] = {u(0, 0), u(0, 1), u(1, 0), u(1, 1)};
    }
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            Complex ip = 0.0;
            for (int s = 0; s < 4; ++s) ip += std::conj(states[a][s]) * states[b][s];
            CHECK(std::abs(ip) <= 1e-15);
        }
    }
    // And each play lands on its own outcome with probability one.
    for (int t = 0; t < 4; ++t) {
        const Vec4 probs = run_protocol(su2_from_quat(UnitQuaternion::basis(t), Player::One),
                                        SU2Matrix::identity())
                               .probabilities();
        CHECK(probs[t] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("run_protocol examples") {
    SUBCASE("identity play lands on CC") {
        const AmplitudeVector amps = run_protocol(SU2Matrix::identity(), SU2Matrix::identity());
        const Vec4 probs = amps.probabilities();
        CHECK(probs[0] == doctest::Approx(1.0).epsilon(1e-14));
        CHECK(probs[1] + probs[2] + probs[3] <= 1e-14);
    }
    SUBCASE("Player One's i lands on DD") {
        const AmplitudeVector amps =
            run_protocol(su2_from_quat(UnitQuaternion::basis(1), Player::One), SU2Matrix::identity());
        const Vec4 probs = amps.probabilities();
        CHECK(probs[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("probabilities are normalized and the expansion reconstructs the state") {
        Rng rng(63);
        const std::array<std::array<double, 4>, 4> basis{
            {{1, 0, 0, 1}, {1, 0, 0, -1}, {0, 1, -1, 0}, {0, 1, 1, 0}}};
        for (int n = 0; n < 100; ++n) {
            const SU2Matrix u = su2_from_quat(rng.unit_quaternion(), Player::One);
            const SU2Matrix v = su2_from_quat(rng.unit_quaternion(), Player::Two);
            const AmplitudeVector amps = run_protocol(u, v);
            const Vec4 probs = amps.probabilities();
            CHECK(probs[0] + probs[1] + probs[2] + probs[3] == doctest::Approx(1.0).epsilon(1e-12));

            // Independent state computation: (U x V)(H@H + T@T), i.e. the
            // matrix with entries sum_t U_at V_bt at position (a, b).
            for (int a = 0; a < 2; ++a)
                for (int b = 0; b < 2; ++b) {
                    Complex expected = u(a, 0) * v(b, 0) + u(a, 1) * v(b, 1);
                    Complex rebuilt = 0.0;
                    for (int t = 0; t < 4; ++t) rebuilt += amps.alpha[t] * basis[t][2 * a + b];
                    CHECK(std::abs(rebuilt - expected) <= 1e-10);
                }
        }
    }
    SUBCASE("non-unitary input is rejected") {
        SU2Matrix bad = SU2Matrix::identity();
        bad.m[0][0] = 2.0;
        CHECK_THROWS_AS(run_protocol(bad, SU2Matrix::identity()), NotUnit);
    }
}

TEST_CASE("protocol probabilities equal the quaternion outcome weights") {
    SUBCASE("spot examples") {
        CHECK(payoff_rule_deviation(UnitQuaternion::one(), UnitQuaternion::one()) <= 1e-15);
        const UnitQuaternion half(Quaternion{1 / std::sqrt(2.0), 1 / std::sqrt(2.0), 0, 0});
        CHECK(payoff_rule_deviation(half, UnitQuaternion::one()) <= 1e-14);
        // Also pin the weight split itself for the diagonal play.
        const Vec4 probs =
            run_protocol(su2_from_quat(half, Player::One), SU2Matrix::identity()).probabilities();
        CHECK(max_abs_diff(probs, {0.5, 0.5, 0.0, 0.0}) <= 1e-14);
    }
    SUBCASE("1000 seeded random pairs") {
        Rng rng(64);
        double worst = 0.0;
        for (int n = 0; n < 1000; ++n)
            worst = std::max(worst, payoff_rule_deviation(rng.unit_quaternion(), rng.unit_quaternion()));
        CHECK(worst <= 1e-10);
    }
    SUBCASE("the amplitude scale is 1 under this normalization") {
        Rng rng(65);
        for (int n = 0; n < 50; ++n) {
            const UnitQuaternion p = rng.unit_quaternion();
            const UnitQuaternion q = rng.unit_quaternion();
            const AmplitudeVector amps = run_protocol(su2_from_quat(p, Player::One),
                                                      su2_from_quat(q, Player::Two));
            const Quaternion pq = p.value() * q.value();
            for (int t = 0; t < 4; ++t)
                CHECK(std::abs(amps.alpha[t]) ==
                      doctest::Approx(std::abs(pq.coord(t))).epsilon(1e-12));
        }
    }
}

TEST_CASE("opting out forces the uniform outcome distribution") {
    const Vec4 quarter{0.25, 0.25, 0.25, 0.25};
    SUBCASE("identity play") {
        CHECK(max_abs_diff(opt_out_distribution(SU2Matrix::identity(), SU2Matrix::identity()),
                           quarter) <= 1e-15);
    }
    SUBCASE("100 random operator pairs") {
        Rng rng(66);
        for (int n = 0; n < 100; ++n) {
            const Vec4 probs = opt_out_distribution(su2_from_quat(rng.unit_quaternion(), Player::One),
                                                    su2_from_quat(rng.unit_quaternion(), Player::Two));
            CHECK(max_abs_diff(probs, quarter) <= 1e-12);
        }
    }
    SUBCASE("fresh penny prepared tails-up changes nothing") {
        Rng rng(67);
        for (int n = 0; n < 20; ++n) {
            const Vec4 probs = opt_out_distribution(
                su2_from_quat(rng.unit_quaternion(), Player::One),
                su2_from_quat(rng.unit_quaternion(), Player::Two),
                {Complex{0.0, 0.0}, Complex{1.0, 0.0}});
            CHECK(max_abs_diff(probs, quarter) <= 1e-12);
        }
    }
}
