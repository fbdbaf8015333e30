#include "ewlnash/quaternion.hpp"

#include <cmath>
#include <string>

namespace ewlnash {

UnitQuaternion::UnitQuaternion(const Quaternion& q, const char* field) : q_(q) {
    const double n = q.norm();
    if (!std::isfinite(n) || std::abs(n - 1.0) > kRenormWindow)
        throw NotUnit(field, std::string(field) + ": norm " + std::to_string(n) +
                                 " is not within 1e-6 of 1");
    if (std::abs(n - 1.0) > 0.0) q_ = (1.0 / n) * q_;
}

UnitQuaternion UnitQuaternion::renormalized(const Quaternion& q) {
    const double n = q.norm();
    UnitQuaternion u = UnitQuaternion::one();
    u.q_ = (1.0 / n) * q;
    return u;
}

OrthoFrame::OrthoFrame(const UnitQuaternion& a, const UnitQuaternion& b, const UnitQuaternion& c,
                       const UnitQuaternion& d, double tol)
    : q_{a, b, c, d} {
    for (int s = 0; s < 4; ++s)
        for (int t = s + 1; t < 4; ++t)
            if (std::abs(inner(q_[s], q_[t])) > tol)
                throw NotOrthogonal("frame", "frame members " + std::to_string(s) + " and " +
                                                 std::to_string(t) + " are not orthogonal");
}

Mat4 OrthoFrame::as_matrix() const {
    Mat4 r;
    for (int c = 0; c < 4; ++c) {
        const Vec4 v = q_[c].coords();
        for (int row = 0; row < 4; ++row) r.m[row][c] = v[row];
    }
    return r;
}

OrthoFrame extend_to_frame(std::span<const UnitQuaternion> seed, double tol) {
    if (seed.size() > 4) throw NotOrthogonal("seed", "seed has more than four members");
    for (size_t s = 0; s < seed.size(); ++s)
        for (size_t t = s + 1; t < seed.size(); ++t)
            if (std::abs(inner(seed[s], seed[t])) > tol)
                throw NotOrthogonal("seed", "seed members " + std::to_string(s) + " and " +
                                                std::to_string(t) + " are not orthogonal");

    std::vector<Quaternion> basis;
    basis.reserve(4);
    for (const UnitQuaternion& s : seed) basis.push_back(s.value());

    // Candidates 1, i, j, k in order; keep those with enough residual.
    for (int t = 0; t < 4 && basis.size() < 4; ++t) {
        Quaternion cand = Quaternion::basis(t);
        for (const Quaternion& b : basis) cand = cand - inner(b, cand) * b;
        const double res = cand.norm();
        if (res < 1e-6) continue;
        basis.push_back((1.0 / res) * cand);
    }
    if (basis.size() < 4)
        throw NotOrthogonal("seed", "could not complete the seed to a full frame");

    // Re-orthogonalize the completed vectors (never the seed) to scrub
    // round-off from the projections.
    for (size_t s = std::max<size_t>(seed.size(), 1); s < 4; ++s) {
        Quaternion v = basis[s];
        for (size_t t = 0; t < s; ++t) v = v - inner(basis[t], v) * basis[t];
        basis[s] = (1.0 / v.norm()) * v;
    }

    return OrthoFrame(UnitQuaternion::renormalized(basis[0]), UnitQuaternion::renormalized(basis[1]),
                      UnitQuaternion::renormalized(basis[2]), UnitQuaternion::renormalized(basis[3]),
                      tol);
}

} // namespace ewlnash
