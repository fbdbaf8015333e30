#include "ewlnash/strategy.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace ewlnash {

MixedStrategy::MixedStrategy(std::vector<Atom> atoms, const char* field) : atoms_(std::move(atoms)) {
    if (atoms_.empty()) throw ValidationError(field, "strategy has no atoms");
    double total = 0.0;
    for (size_t n = 0; n < atoms_.size(); ++n) {
        double& w = atoms_[n].weight;
        if (!std::isfinite(w) || w < -1e-12)
            throw ValidationError(std::string(field) + ".atoms[" + std::to_string(n) + "].w",
                                  "weights must be nonnegative");
        w = std::max(w, 0.0);
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-9)
        throw ValidationError(std::string(field) + ".atoms",
                              "weights sum to " + std::to_string(total) + ", expected 1");
    for (Atom& a : atoms_) a.weight /= total;
}

MixedStrategy MixedStrategy::point_mass(const UnitQuaternion& q) {
    return MixedStrategy({Atom{q, 1.0}});
}

MixedStrategy MixedStrategy::uniform(const OrthoFrame& frame) {
    std::vector<Atom> atoms;
    atoms.reserve(4);
    for (const UnitQuaternion& q : frame.members()) atoms.push_back({q, 0.25});
    return MixedStrategy(std::move(atoms));
}

Mat4 second_moment(const MixedStrategy& mu) {
    Mat4 s;
    for (const Atom& a : mu.atoms()) {
        const Vec4 c = a.point.coords();
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) s.m[p][q] += a.weight * c[p] * c[q];
    }
    return s;
}

double moment_distance(const MixedStrategy& a, const MixedStrategy& b) {
    return (second_moment(a) - second_moment(b)).max_abs();
}

bool equivalent(const MixedStrategy& a, const MixedStrategy& b, double tol) {
    return moment_distance(a, b) <= tol;
}

namespace {

Vec4 sign_normalized(Vec4 v) {
    for (double c : v) {
        if (std::abs(c) > 1e-9) {
            if (c < 0)
                for (double& e : v) e = -e;
            break;
        }
    }
    return v;
}

} // namespace

MixedStrategy reduce(const MixedStrategy& mu) {
    const JacobiResult eig = jacobi_eigensolve(second_moment(mu));
    std::vector<Atom> atoms;
    double total = 0.0;
    for (int t = 0; t < 4; ++t) {
        if (eig.values[t] < kWeightFloor) continue;
        const Vec4 v = sign_normalized(eig.vectors.column(t));
        atoms.push_back({UnitQuaternion::renormalized(Quaternion::from_coords(v)), eig.values[t]});
        total += eig.values[t];
    }
    for (Atom& a : atoms) a.weight /= total;
    return MixedStrategy(std::move(atoms));
}

MixedStrategy translate(const MixedStrategy& mu, const UnitQuaternion& u, Side side) {
    const UnitQuaternion u_inv = u.inverse();
    std::vector<Atom> atoms;
    atoms.reserve(mu.size());
    for (const Atom& a : mu.atoms()) {
        const UnitQuaternion moved = side == Side::Right ? a.point * u_inv : u_inv * a.point;
        atoms.push_back({moved, a.weight});
    }
    return MixedStrategy(std::move(atoms));
}

std::pair<double, double> mixed_payoff(const Game& g, const MixedStrategy& nu,
                                       const MixedStrategy& mu) {
    double one = 0.0, two = 0.0;
    for (const Atom& p : nu.atoms()) {
        for (const Atom& q : mu.atoms()) {
            const auto [po, pt] = quantum_payoff(g, p.point, q.point);
            one += p.weight * q.weight * po;
            two += p.weight * q.weight * pt;
        }
    }
    return {one, two};
}

} // namespace ewlnash
