#include "ewlnash/mat4.hpp"

#include <algorithm>
#include <cmath>

#include "ewlnash/errors.hpp"

namespace ewlnash {

namespace {

double off_diagonal_max(const Mat4& a) {
    double r = 0.0;
    for (int p = 0; p < 4; ++p)
        for (int q = p + 1; q < 4; ++q) r = std::max(r, std::abs(a.m[p][q]));
    return r;
}

} // namespace

JacobiResult jacobi_eigensolve(const Mat4& sym, int max_sweeps) {
    Mat4 a = sym;
    Mat4 v = Mat4::identity();
    const double stop = 1e-13 * (1.0 + sym.max_abs());

    int sweep = 0;
    while (off_diagonal_max(a) > stop) {
        if (sweep++ >= max_sweeps)
            throw NoConvergence("jacobi_eigensolve: off-diagonal did not reach threshold");
        for (int p = 0; p < 4; ++p) {
            for (int q = p + 1; q < 4; ++q) {
                const double apq = a.m[p][q];
                if (std::abs(apq) <= stop * 0.01) continue;

                const double theta = (a.m[q][q] - a.m[p][p]) / (2.0 * apq);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;

                for (int r = 0; r < 4; ++r) {
                    const double arp = a.m[r][p];
                    const double arq = a.m[r][q];
                    a.m[r][p] = c * arp - s * arq;
                    a.m[r][q] = s * arp + c * arq;
                }
                for (int r = 0; r < 4; ++r) {
                    const double apr = a.m[p][r];
                    const double aqr = a.m[q][r];
                    a.m[p][r] = c * apr - s * aqr;
                    a.m[q][r] = s * apr + c * aqr;
                }
                for (int r = 0; r < 4; ++r) {
                    const double vrp = v.m[r][p];
                    const double vrq = v.m[r][q];
                    v.m[r][p] = c * vrp - s * vrq;
                    v.m[r][q] = s * vrp + c * vrq;
                }
            }
        }
    }

    std::array<int, 4> order{0, 1, 2, 3};
    std::stable_sort(order.begin(), order.end(),
                     [&](int lhs, int rhs) { return a.m[lhs][lhs] > a.m[rhs][rhs]; });

    JacobiResult result;
    for (int t = 0; t < 4; ++t) {
        result.values[t] = a.m[order[t]][order[t]];
        for (int r = 0; r < 4; ++r) result.vectors.m[r][t] = v.m[r][order[t]];
    }
    return result;
}

} // namespace ewlnash
