#pragma once

#include <array>
#include <cstddef>

namespace ewlnash {

using Vec4 = std::array<double, 4>;

/// Dense 4x4 real matrix, row major. Small enough that everything is by value.
struct Mat4 {
    std::array<std::array<double, 4>, 4> m{};

    static constexpr Mat4 identity() {
        Mat4 r;
        for (int t = 0; t < 4; ++t) r.m[t][t] = 1.0;
        return r;
    }

    static constexpr Mat4 diagonal(const Vec4& d) {
        Mat4 r;
        for (int t = 0; t < 4; ++t) r.m[t][t] = d[t];
        return r;
    }

    constexpr double operator()(int r, int c) const { return m[r][c]; }
    constexpr double& operator()(int r, int c) { return m[r][c]; }

    constexpr Mat4 transpose() const {
        Mat4 r;
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b) r.m[a][b] = m[b][a];
        return r;
    }

    constexpr double trace() const { return m[0][0] + m[1][1] + m[2][2] + m[3][3]; }

    friend constexpr Mat4 operator+(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) r.m[p][q] = a.m[p][q] + b.m[p][q];
        return r;
    }

    friend constexpr Mat4 operator-(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) r.m[p][q] = a.m[p][q] - b.m[p][q];
        return r;
    }

    friend constexpr Mat4 operator*(double s, const Mat4& a) {
        Mat4 r;
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) r.m[p][q] = s * a.m[p][q];
        return r;
    }

    friend constexpr Mat4 operator*(const Mat4& a, const Mat4& b) {
        Mat4 r;
        for (int p = 0; p < 4; ++p)
            for (int q = 0; q < 4; ++q) {
                double acc = 0.0;
                for (int t = 0; t < 4; ++t) acc += a.m[p][t] * b.m[t][q];
                r.m[p][q] = acc;
            }
        return r;
    }

    friend constexpr Vec4 operator*(const Mat4& a, const Vec4& v) {
        Vec4 r{};
        for (int p = 0; p < 4; ++p)
            for (int t = 0; t < 4; ++t) r[p] += a.m[p][t] * v[t];
        return r;
    }

    constexpr double max_abs() const {
        double r = 0.0;
        for (const auto& row : m)
            for (double e : row) {
                double a = e < 0 ? -e : e;
                if (a > r) r = a;
            }
        return r;
    }

    constexpr Vec4 column(int c) const { return {m[0][c], m[1][c], m[2][c], m[3][c]}; }
};

constexpr Mat4 outer(const Vec4& a, const Vec4& b) {
    Mat4 r;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) r.m[p][q] = a[p] * b[q];
    return r;
}

constexpr double quad_form(const Mat4& a, const Vec4& v) {
    double acc = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) acc += v[p] * a.m[p][q] * v[q];
    return acc;
}

constexpr double dot(const Vec4& a, const Vec4& b) {
    return a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3];
}

/// Eigen pairs of a symmetric 4x4 matrix, eigenvalues sorted descending,
/// eigenvectors the matching columns of an orthogonal matrix.
struct JacobiResult {
    Vec4 values;
    Mat4 vectors;
};

/// Cyclic Jacobi diagonalization. Converges when the largest off-diagonal
/// entry falls below 1e-13 * (1 + max|M|); throws NoConvergence after
/// max_sweeps sweeps (unreachable in practice for 4x4 input).
JacobiResult jacobi_eigensolve(const Mat4& sym, int max_sweeps = 50);

} // namespace ewlnash
