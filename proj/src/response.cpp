#include "ewlnash/response.hpp"

#include <cmath>

namespace ewlnash {

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

EigenDecomposition eigen_sym4(const Mat4& sym) {
    const JacobiResult raw = jacobi_eigensolve(sym);
    EigenDecomposition d;
    d.values = raw.values;
    for (int t = 0; t < 4; ++t) d.vectors[t] = sign_normalized(raw.vectors.column(t));

    const double tol = kClusterTolBase * (1.0 + std::abs(d.values[0]));
    for (int t = 0; t < 4; ++t) {
        if (t > 0 && d.values[t - 1] - d.values[t] <= tol)
            d.clusters.back().push_back(t);
        else
            d.clusters.push_back({t});
    }
    return d;
}

PayoffForm payoff_form(const Game& g, Player player, const MixedStrategy& opponent) {
    const Vec4 payoffs = player == Player::One ? g.payoffs_one() : g.payoffs_two();
    const Mat4 diag = Mat4::diagonal(payoffs);

    PayoffForm form;
    form.player = player;
    for (const Atom& a : opponent.atoms()) {
        const Mat4 b = player == Player::One ? right_mul_matrix(a.point.value())
                                             : left_mul_matrix(a.point.value());
        form.matrix = form.matrix + a.weight * (b.transpose() * diag * b);
    }
    form.lambda_max = eigen_sym4(form.matrix).values[0];
    return form;
}

BestResponse best_response_set(const Game& g, Player player, const MixedStrategy& opponent) {
    const PayoffForm form = payoff_form(g, player, opponent);
    const EigenDecomposition d = eigen_sym4(form.matrix);

    BestResponse r;
    r.value = d.values[0];
    for (int t : d.clusters.front())
        r.basis.push_back(UnitQuaternion::renormalized(Quaternion::from_coords(d.vectors[t])));
    return r;
}

double k_constraint(const Vec4& probs, const OrthoFrame& support, const UnitQuaternion& p) {
    double total = 0.0;
    for (int s = 0; s < 4; ++s) {
        double prefactor = 1.0;
        for (int t = 0; t < 4; ++t)
            if (t != s) prefactor *= probs[s] - probs[t];
        total += prefactor * k_function(p.value() * support[s].value());
    }
    return total;
}

} // namespace ewlnash
