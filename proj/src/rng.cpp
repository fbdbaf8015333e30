#include "ewlnash/rng.hpp"

#include <cmath>
#include <numbers>

namespace ewlnash {

double Rng::gaussian() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

UnitQuaternion Rng::unit_quaternion() {
    while (true) {
        const Quaternion q{gaussian(), gaussian(), gaussian(), gaussian()};
        const double n = q.norm();
        if (n > 1e-6) return UnitQuaternion::renormalized(q);
    }
}

OrthoFrame Rng::frame() {
    const UnitQuaternion a = unit_quaternion();
    const UnitQuaternion b = unit_quaternion();
    const std::array<UnitQuaternion, 4> members{
        a * UnitQuaternion::basis(0) * b, a * UnitQuaternion::basis(1) * b,
        a * UnitQuaternion::basis(2) * b, a * UnitQuaternion::basis(3) * b};
    return OrthoFrame(members[0], members[1], members[2], members[3]);
}

Game Rng::game() {
    std::array<PayoffPair, 4> table;
    for (PayoffPair& p : table) {
        p.to_one = uniform(-10.0, 10.0);
        p.to_two = uniform(-10.0, 10.0);
    }
    return Game(table);
}

Game Rng::generic_game() {
    while (true) {
        Game g = game();
        if (is_generic(g).generic) return g;
    }
}

Game Rng::generic_zero_sum_game() {
    while (true) {
        std::array<PayoffPair, 4> table;
        for (PayoffPair& p : table) {
            p.to_one = uniform(-10.0, 10.0);
            p.to_two = -p.to_one;
        }
        Game g(table);
        if (is_generic(g).generic) return g;
    }
}

MixedStrategy Rng::strategy(int max_atoms) {
    const int n = 1 + static_cast<int>(uniform() * max_atoms) % max_atoms;
    std::vector<Atom> atoms;
    atoms.reserve(n);
    double total = 0.0;
    for (int t = 0; t < n; ++t) {
        const double w = uniform() + 1e-6;
        atoms.push_back({unit_quaternion(), w});
        total += w;
    }
    for (Atom& a : atoms) a.weight /= total;
    return MixedStrategy(std::move(atoms));
}

} // namespace ewlnash
