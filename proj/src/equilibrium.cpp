#include "ewlnash/equilibrium.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "ewlnash/rng.hpp"

namespace ewlnash {

namespace {

// Index of the unit (0..3 for +-1, +-i, +-j, +-k) a quaternion coincides
// with at tolerance tol, or -1.
int signed_unit_index(const Quaternion& q, double tol) {
    for (int t = 0; t < 4; ++t) {
        if (std::abs(std::abs(q.coord(t)) - 1.0) > tol) continue;
        bool rest_zero = true;
        for (int s = 0; s < 4; ++s)
            if (s != t && std::abs(q.coord(s)) > tol) rest_zero = false;
        if (rest_zero) return t;
    }
    return -1;
}

struct PlayerCheck {
    double value = 0.0;
    double slack = 0.0;
    std::vector<AtomSlack> violations;
};

PlayerCheck check_player(const Game& g, Player player, const MixedStrategy& own,
                         const MixedStrategy& opponent, double eq_tol) {
    const PayoffForm form = payoff_form(g, player, opponent);
    PlayerCheck r;
    r.value = form.lambda_max;
    int index = 0;
    for (const Atom& a : own.atoms()) {
        if (a.weight > kWeightFloor) {
            const double slack = form.lambda_max - quad_form(form.matrix, a.point.coords());
            r.slack = std::max(r.slack, slack);
            if (slack > eq_tol) r.violations.push_back({index, slack});
        }
        ++index;
    }
    return r;
}

} // namespace

EquilibriumReport verify_equilibrium(const Game& g, const MixedStrategy& nu,
                                     const MixedStrategy& mu, double eq_tol) {
    const PlayerCheck one = check_player(g, Player::One, nu, mu, eq_tol);
    const PlayerCheck two = check_player(g, Player::Two, mu, nu, eq_tol);

    EquilibriumReport report;
    report.slack_one = one.slack;
    report.slack_two = two.slack;
    report.value_one = one.value;
    report.value_two = two.value;
    report.violations_one = one.violations;
    report.violations_two = two.violations;
    report.payoffs = mixed_payoff(g, nu, mu);
    report.is_equilibrium = one.slack <= eq_tol && two.slack <= eq_tol;
    return report;
}

namespace {

// Coefficients of the homogeneous quartic K(Xp + Yq); entry m holds the
// coefficient of X^(4-m) Y^m.
std::array<double, 5> quartic_coeffs(const Quaternion& p, const Quaternion& q) {
    std::array<double, 5> c{};
    c[0] = 1.0;
    int degree = 0;
    for (int t = 0; t < 4; ++t) {
        std::array<double, 5> next{};
        for (int m = 0; m <= degree; ++m) {
            next[m] += p.coord(t) * c[m];
            next[m + 1] += q.coord(t) * c[m];
        }
        c = next;
        ++degree;
    }
    return c;
}

double max_abs5(const std::array<double, 5>& c) {
    double r = 0.0;
    for (double e : c) r = std::max(r, std::abs(e));
    return r;
}

} // namespace

IntertwineWitness intertwined(const Quaternion& p, const Quaternion& q, const Quaternion& r,
                              const Quaternion& s, double tol) {
    IntertwineWitness w;
    w.coeffs_first = quartic_coeffs(p, q);
    w.coeffs_second = quartic_coeffs(r, s);

    const double nf = max_abs5(w.coeffs_first);
    const double ns = max_abs5(w.coeffs_second);
    if (nf == 0.0 && ns == 0.0) {
        // Both quartics vanish identically; proportionality is vacuous.
        w.intertwined = true;
        w.degenerate = true;
        return w;
    }
    if (nf == 0.0 || ns == 0.0) {
        w.residual = 1.0;
        return w;
    }

    double res_plus = 0.0, res_minus = 0.0;
    for (int m = 0; m < 5; ++m) {
        const double a = w.coeffs_first[m] / nf;
        const double b = w.coeffs_second[m] / ns;
        res_plus = std::max(res_plus, std::abs(b - a));
        res_minus = std::max(res_minus, std::abs(b + a));
    }
    const bool flipped = res_minus < res_plus;
    w.residual = flipped ? res_minus : res_plus;
    w.alpha = (flipped ? -1.0 : 1.0) * ns / nf;
    w.intertwined = w.residual <= tol;
    return w;
}

FullIntertwineWitness fully_intertwined(const Quaternion& p, const Quaternion& q,
                                        const Quaternion& r, const Quaternion& s, double tol) {
    FullIntertwineWitness w;
    w.direct = intertwined(p, q, r, s, tol);
    w.swapped = intertwined(p, r, q, s, tol);
    w.fully_intertwined = w.direct.intertwined && w.swapped.intertwined;
    return w;
}

const char* to_string(EquilibriumType t) {
    switch (t) {
        case EquilibriumType::A: return "a";
        case EquilibriumType::B: return "b";
        case EquilibriumType::C: return "c";
        case EquilibriumType::D: return "d";
        case EquilibriumType::E: return "e";
        case EquilibriumType::NotEquilibrium: return "not_equilibrium";
        case EquilibriumType::Unclassified: return "unclassified";
    }
    return "unclassified";
}

std::pair<MixedStrategy, MixedStrategy> translated_pair(const MixedStrategy& nu,
                                                        const MixedStrategy& mu,
                                                        const UnitQuaternion& u) {
    return {translate(nu, u, Side::Right), translate(mu, u.inverse(), Side::Left)};
}

CanonicalPair canonicalize_pair(const MixedStrategy& nu, const MixedStrategy& mu) {
    const MixedStrategy reduced_mu = reduce(mu);
    const Atom* best = &reduced_mu.atoms()[0];
    for (const Atom& a : reduced_mu.atoms()) {
        if (a.weight > best->weight ||
            (a.weight == best->weight && a.point.coords() < best->point.coords()))
            best = &a;
    }
    const UnitQuaternion u = best->point;
    // The inverse direction of translated_pair: atoms map to (p u, u^-1 q),
    // which lands the chosen atom of mu on +-1.
    auto [cnu, cmu] = translated_pair(nu, mu, u.inverse());
    return {std::move(cnu), std::move(cmu), u};
}

namespace detail {

std::array<double, 2> principal_angles(const std::vector<Atom>& nu, const std::vector<Atom>& mu) {
    // Both supports are orthonormal pairs, so the singular values of the 2x2
    // cross-inner-product matrix are the principal-angle cosines.
    double m[2][2];
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b) m[a][b] = inner(nu[a].point, mu[b].point);

    const double t = m[0][0] * m[0][0] + m[0][1] * m[0][1] + m[1][0] * m[1][0] + m[1][1] * m[1][1];
    const double det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
    const double disc = std::sqrt(std::max(t * t - 4.0 * det * det, 0.0));
    const double hi = std::clamp(std::sqrt(std::max((t + disc) / 2.0, 0.0)), 0.0, 1.0);
    const double lo = std::clamp(std::sqrt(std::max((t - disc) / 2.0, 0.0)), 0.0, 1.0);
    return {std::acos(hi), std::acos(lo)};
}

std::optional<FullIntertwineWitness> match_type_c(const std::vector<Atom>& nu,
                                                  const std::vector<Atom>& mu) {
    if (nu.size() != 2 || mu.size() != 2) return std::nullopt;

    int one_idx = -1;
    for (int t = 0; t < 2; ++t)
        if (signed_unit_index(mu[t].point, kClassTol) == 0) one_idx = t;
    if (one_idx < 0) return std::nullopt;
    const Quaternion v = mu[1 - one_idx].point;

    for (int first : {0, 1}) {
        const Quaternion p = nu[first].point;
        const Quaternion r = nu[1 - first].point;
        const Quaternion u = p.conjugate() * r; // r = p u
        const FullIntertwineWitness w = fully_intertwined(p, p * v, r, p * v * u);
        if (w.fully_intertwined && !w.direct.degenerate && !w.swapped.degenerate) return w;
    }
    return std::nullopt;
}

} // namespace detail

namespace {

bool all_signed_units(const std::vector<Atom>& atoms) {
    for (const Atom& a : atoms)
        if (signed_unit_index(a.point, kClassTol) < 0) return false;
    return true;
}

bool weights_near(const std::vector<Atom>& atoms, double w) {
    for (const Atom& a : atoms)
        if (std::abs(a.weight - w) > kClassTol) return false;
    return true;
}

} // namespace

Classification classify(const Game& g, const MixedStrategy& nu, const MixedStrategy& mu,
                        double eq_tol) {
    Classification cls;

    const MixedStrategy rnu = reduce(nu);
    const MixedStrategy rmu = reduce(mu);
    cls.report = verify_equilibrium(g, rnu, rmu, eq_tol);

    const CanonicalPair canon = canonicalize_pair(rnu, rmu);
    cls.translation = canon.u;
    cls.canonical_nu.assign(canon.nu.atoms().begin(), canon.nu.atoms().end());
    cls.canonical_mu.assign(canon.mu.atoms().begin(), canon.mu.atoms().end());

    if (cls.canonical_nu.size() == 2 && cls.canonical_mu.size() == 2)
        cls.principal_angles = detail::principal_angles(cls.canonical_nu, cls.canonical_mu);

    if (!cls.report.is_equilibrium) {
        cls.type = EquilibriumType::NotEquilibrium;
        return cls;
    }

    const size_t n1 = cls.canonical_nu.size();
    const size_t n2 = cls.canonical_mu.size();

    if (n1 == 4 && n2 == 4 && weights_near(cls.canonical_nu, 0.25) &&
        weights_near(cls.canonical_mu, 0.25)) {
        cls.type = EquilibriumType::A;
        return cls;
    }
    if (n1 == 1 && n2 == 1 && all_signed_units(cls.canonical_nu) &&
        all_signed_units(cls.canonical_mu)) {
        cls.type = EquilibriumType::E;
        return cls;
    }
    if (n1 == 3 && n2 == 3 && all_signed_units(cls.canonical_nu) &&
        all_signed_units(cls.canonical_mu)) {
        cls.type = EquilibriumType::B;
        return cls;
    }
    if (n1 == 2 && n2 == 2) {
        if (auto witness = detail::match_type_c(cls.canonical_nu, cls.canonical_mu)) {
            cls.intertwine = *witness;
            cls.type = EquilibriumType::C;
            return cls;
        }
        const bool half_weights =
            weights_near(cls.canonical_nu, 0.5) && weights_near(cls.canonical_mu, 0.5);
        if (half_weights && (*cls.principal_angles)[0] < kPlaneTol &&
            (*cls.principal_angles)[1] < kPlaneTol) {
            cls.type = EquilibriumType::D;
            return cls;
        }
        cls.note = "two-point supports without a non-degenerate intertwining witness or "
                   "coinciding planes";
    }

    cls.type = EquilibriumType::Unclassified;
    if (cls.note.empty()) cls.note = "no canonical pattern matched";
    return cls;
}

namespace {

int outcome_index(int a, int b) {
    const Quaternion prod = Quaternion::basis(a) * Quaternion::basis(b);
    for (int t = 0; t < 4; ++t)
        if (prod.coord(t) != 0.0) return t;
    return 0; // unreachable
}

// Solves the 3x3 system A w = rhs by Gaussian elimination with partial
// pivoting; returns false when (numerically) singular.
bool solve3(double a[3][3], double rhs[3], double out[3]) {
    int perm[3] = {0, 1, 2};
    for (int col = 0; col < 3; ++col) {
        int pivot = col;
        for (int row = col + 1; row < 3; ++row)
            if (std::abs(a[perm[row]][col]) > std::abs(a[perm[pivot]][col])) pivot = row;
        std::swap(perm[col], perm[pivot]);
        const double lead = a[perm[col]][col];
        if (std::abs(lead) < 1e-12) return false;
        for (int row = col + 1; row < 3; ++row) {
            const double f = a[perm[row]][col] / lead;
            for (int c2 = col; c2 < 3; ++c2) a[perm[row]][c2] -= f * a[perm[col]][c2];
            rhs[perm[row]] -= f * rhs[perm[col]];
        }
    }
    for (int col = 2; col >= 0; --col) {
        double acc = rhs[perm[col]];
        for (int c2 = col + 1; c2 < 3; ++c2) acc -= a[perm[col]][c2] * out[c2];
        out[col] = acc / a[perm[col]][col];
    }
    return true;
}

// Weights on the opponent's three units making `payoffs[outcome(own, opp)]`
// constant across the player's three own units.
bool indifference_weights(const Vec4& payoffs, const std::array<int, 3>& own,
                          const std::array<int, 3>& opp, bool own_is_row, double out[3]) {
    double a[3][3];
    double rhs[3] = {0.0, 0.0, 0.0};
    for (int eq = 0; eq < 2; ++eq) {
        for (int c = 0; c < 3; ++c) {
            const int t_first = own_is_row ? outcome_index(own[eq], opp[c])
                                           : outcome_index(opp[c], own[eq]);
            const int t_second = own_is_row ? outcome_index(own[eq + 1], opp[c])
                                            : outcome_index(opp[c], own[eq + 1]);
            a[eq][c] = payoffs[t_first] - payoffs[t_second];
        }
    }
    for (int c = 0; c < 3; ++c) a[2][c] = 1.0;
    rhs[2] = 1.0;
    return solve3(a, rhs, out);
}

std::vector<Atom> unit_atoms(const std::array<int, 3>& units, const double w[3]) {
    std::vector<Atom> atoms;
    for (int t = 0; t < 3; ++t) atoms.push_back({UnitQuaternion::basis(units[t]), w[t]});
    return atoms;
}

std::string support_key(const MixedStrategy& s) {
    std::string key;
    char buf[64];
    for (const Atom& a : s.atoms()) {
        for (int t = 0; t < 4; ++t) {
            std::snprintf(buf, sizeof buf, "%.17g,", a.point.coord(t));
            key += buf;
        }
        std::snprintf(buf, sizeof buf, "%.17g;", a.weight);
        key += buf;
    }
    return key;
}

} // namespace

std::vector<FoundEquilibrium> find_equilibria(const Game& g, uint64_t seed, int n_frames) {
    std::vector<FoundEquilibrium> out;
    auto consider = [&](const MixedStrategy& nu, const MixedStrategy& mu) {
        if (!verify_equilibrium(g, nu, mu).is_equilibrium) return;
        out.push_back({nu, mu, classify(g, nu, mu)});
    };

    // Uniform-frame pairs: the standard frame plus random translates of it.
    const OrthoFrame std_frame(UnitQuaternion::basis(0), UnitQuaternion::basis(1),
                               UnitQuaternion::basis(2), UnitQuaternion::basis(3));
    const MixedStrategy base = MixedStrategy::uniform(std_frame);
    consider(base, base);
    Rng rng(seed);
    for (int t = 0; t < n_frames; ++t) {
        const UnitQuaternion u = rng.unit_quaternion();
        const auto [tnu, tmu] = translated_pair(base, base, u);
        consider(tnu, tmu);
    }

    // All 16 pure pairs over {1, i, j, k}.
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b)
            consider(MixedStrategy::point_mass(UnitQuaternion::basis(a)),
                     MixedStrategy::point_mass(UnitQuaternion::basis(b)));

    // Three-point candidates: for each pair of 3-element subsets, the unique
    // indifference weights, kept only when strictly positive and the full
    // (global eigenspace) verification passes.
    const std::array<std::array<int, 3>, 4> subsets{
        {{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}}};
    for (const auto& own_one : subsets) {
        for (const auto& own_two : subsets) {
            double w_two[3]; // Player Two's weights (nu-side indifference)
            double w_one[3];
            if (!indifference_weights(g.payoffs_one(), own_one, own_two, true, w_two)) continue;
            if (!indifference_weights(g.payoffs_two(), own_two, own_one, false, w_one)) continue;
            const double floor = 1e-9;
            bool positive = true;
            for (int t = 0; t < 3; ++t)
                if (w_one[t] < floor || w_two[t] < floor) positive = false;
            if (!positive) continue;
            consider(MixedStrategy(unit_atoms(own_one, w_one)),
                     MixedStrategy(unit_atoms(own_two, w_two)));
        }
    }

    std::stable_sort(out.begin(), out.end(), [](const FoundEquilibrium& a, const FoundEquilibrium& b) {
        if (a.classification.type != b.classification.type)
            return static_cast<int>(a.classification.type) < static_cast<int>(b.classification.type);
        const std::string ka = support_key(a.nu) + "|" + support_key(a.mu);
        const std::string kb = support_key(b.nu) + "|" + support_key(b.mu);
        return ka < kb;
    });
    return out;
}

} // namespace ewlnash
