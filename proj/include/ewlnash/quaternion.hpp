#pragma once

#include <array>
#include <cmath>
#include <span>
#include <vector>

#include "ewlnash/errors.hpp"
#include "ewlnash/mat4.hpp"

namespace ewlnash {

inline constexpr double kUnitNormTol = 1e-9;   // invariant on UnitQuaternion
inline constexpr double kRenormWindow = 1e-6;  // constructors renormalize below, reject above
inline constexpr double kOrthoTol = 1e-9;      // frame orthogonality

/// A quaternion w + x*i + y*j + z*k with real double coefficients.
///
/// Coordinate order everywhere in this library is (1, i, j, k); coord(t)
/// returns the t-th coefficient, 0-based.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_) : w(w_), x(x_), y(y_), z(z_) {}

    static constexpr Quaternion one() { return {1, 0, 0, 0}; }
    static constexpr Quaternion i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion k() { return {0, 0, 0, 1}; }

    /// Basis unit e_t for t in 0..3 (1, i, j, k).
    static constexpr Quaternion basis(int t) {
        switch (t) {
            case 0: return {1, 0, 0, 0};
            case 1: return {0, 1, 0, 0};
            case 2: return {0, 0, 1, 0};
            default: return {0, 0, 0, 1};
        }
    }

    constexpr double coord(int t) const {
        switch (t) {
            case 0: return w;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }
    constexpr double& coord(int t) {
        switch (t) {
            case 0: return w;
            case 1: return x;
            case 2: return y;
            default: return z;
        }
    }

    constexpr Vec4 coords() const { return {w, x, y, z}; }
    static constexpr Quaternion from_coords(const Vec4& c) { return {c[0], c[1], c[2], c[3]}; }

    constexpr Quaternion conjugate() const { return {w, -x, -y, -z}; }

    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& a) {
        return {s * a.w, s * a.x, s * a.y, s * a.z};
    }
    friend constexpr Quaternion operator*(const Quaternion& a, double s) { return s * a; }

    // Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }
};

/// Euclidean inner product of the coordinate vectors; equals pi_1(conj(a)*b).
constexpr double inner(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

/// Product of the four coordinates. Vanishes exactly when the quaternion is a
/// combination of at most three of the units 1, i, j, k.
constexpr double k_function(const Quaternion& a) { return a.w * a.x * a.y * a.z; }

/// A quaternion constrained to the unit sphere S^3 (a pure quantum strategy).
///
/// Construction renormalizes inputs whose norm is within 1e-6 of 1 and rejects
/// anything farther off, so stored values carry norm 1 to machine precision.
class UnitQuaternion {
public:
    explicit UnitQuaternion(const Quaternion& q, const char* field = "quaternion");

    /// Rescales q to unit norm without the 1e-6 admission window. For internal
    /// products of known-unit values, where drift is pure round-off.
    static UnitQuaternion renormalized(const Quaternion& q);

    static UnitQuaternion one() { return UnitQuaternion(Quaternion::one(), Trusted{}); }
    static UnitQuaternion basis(int t) { return UnitQuaternion(Quaternion::basis(t), Trusted{}); }

    const Quaternion& value() const { return q_; }
    operator const Quaternion&() const { return q_; }

    constexpr double coord(int t) const { return q_.coord(t); }
    Vec4 coords() const { return q_.coords(); }

    /// Conjugate of a unit quaternion, which is also its inverse.
    UnitQuaternion conjugate() const { return UnitQuaternion(q_.conjugate(), Trusted{}); }
    UnitQuaternion inverse() const { return conjugate(); }

    constexpr Quaternion operator-() const { return -q_; }

    friend UnitQuaternion operator*(const UnitQuaternion& a, const UnitQuaternion& b) {
        return UnitQuaternion::renormalized(a.q_ * b.q_);
    }

private:
    struct Trusted {};
    UnitQuaternion(const Quaternion& q, Trusted) : q_(q) {}

    Quaternion q_;
};

/// Matrix L with coords(x*q) = L * coords(q) for every q.
constexpr Mat4 left_mul_matrix(const Quaternion& x) {
    return Mat4{{{{x.w, -x.x, -x.y, -x.z},
                  {x.x, x.w, -x.z, x.y},
                  {x.y, x.z, x.w, -x.x},
                  {x.z, -x.y, x.x, x.w}}}};
}

/// Matrix R with coords(p*x) = R * coords(p) for every p.
constexpr Mat4 right_mul_matrix(const Quaternion& x) {
    return Mat4{{{{x.w, -x.x, -x.y, -x.z},
                  {x.x, x.w, x.z, -x.y},
                  {x.y, -x.z, x.w, x.x},
                  {x.z, x.y, -x.x, x.w}}}};
}

/// Both multiplication matrices of x; orthogonal when x is unit.
constexpr std::pair<Mat4, Mat4> mul_matrices(const Quaternion& x) {
    return {left_mul_matrix(x), right_mul_matrix(x)};
}

/// Four mutually orthogonal unit quaternions (an orthonormal basis of R^4).
class OrthoFrame {
public:
    OrthoFrame(const UnitQuaternion& a, const UnitQuaternion& b, const UnitQuaternion& c,
               const UnitQuaternion& d, double tol = kOrthoTol);

    const UnitQuaternion& operator[](int t) const { return q_[t]; }
    const std::array<UnitQuaternion, 4>& members() const { return q_; }

    /// Frame members as the columns of an orthogonal matrix.
    Mat4 as_matrix() const;

private:
    std::array<UnitQuaternion, 4> q_;
};

/// Completes up to four mutually orthogonal unit quaternions to a full frame
/// by Gram-Schmidt against the standard basis, trying 1, i, j, k in order and
/// discarding candidates whose residual after projection is below 1e-6.
/// Throws NotOrthogonal if the seed itself is not orthogonal within tol.
OrthoFrame extend_to_frame(std::span<const UnitQuaternion> seed, double tol = kOrthoTol);

} // namespace ewlnash
