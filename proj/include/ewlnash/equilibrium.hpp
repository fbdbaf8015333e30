#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ewlnash/response.hpp"

namespace ewlnash {

inline constexpr double kEqTol = 1e-8;      // payoff slack at support atoms
inline constexpr double kClassTol = 1e-8;   // weights and support membership
inline constexpr double kTwistTol = 1e-9;   // quartic proportionality
inline constexpr double kPlaneTol = 1e-6;   // principal angles (radians)

struct AtomSlack {
    int index = 0;
    double slack = 0.0;
};

/// Result of checking the Nash condition: each player's support atoms must
/// attain that player's best-response value against the opponent.
struct EquilibriumReport {
    bool is_equilibrium = false;
    double slack_one = 0.0; // max over Player One's support of (lambda_max - achieved)
    double slack_two = 0.0;
    double value_one = 0.0; // lambda_max of each player's payoff form
    double value_two = 0.0;
    std::pair<double, double> payoffs{0.0, 0.0};
    std::vector<AtomSlack> violations_one;
    std::vector<AtomSlack> violations_two;
};

EquilibriumReport verify_equilibrium(const Game& g, const MixedStrategy& nu,
                                     const MixedStrategy& mu, double eq_tol = kEqTol);

/// Proportionality witness for the coordinate quartics K(Xp + Yq) and
/// K(Xr + Ys). `degenerate` marks both quartics identically zero, in which
/// case proportionality is vacuous and alpha is meaningless.
struct IntertwineWitness {
    bool intertwined = false;
    bool degenerate = false;
    double alpha = 0.0;                  // constant with coeffs_second ~ alpha * coeffs_first
    std::array<double, 5> coeffs_first{};  // X^4, X^3 Y, ..., Y^4
    std::array<double, 5> coeffs_second{};
    double residual = 0.0; // max-norm mismatch after normalization
};

IntertwineWitness intertwined(const Quaternion& p, const Quaternion& q, const Quaternion& r,
                              const Quaternion& s, double tol = kTwistTol);

struct FullIntertwineWitness {
    bool fully_intertwined = false;
    IntertwineWitness direct;  // (p, q, r, s)
    IntertwineWitness swapped; // (p, r, q, s)
};

FullIntertwineWitness fully_intertwined(const Quaternion& p, const Quaternion& q,
                                        const Quaternion& r, const Quaternion& s,
                                        double tol = kTwistTol);

enum class EquilibriumType { A, B, C, D, E, NotEquilibrium, Unclassified };

const char* to_string(EquilibriumType t);

/// Classification of a verified equilibrium into the canonical shapes:
///   a: both players uniform (weight 1/4) on orthonormal frames
///   b: both supports are three-point subsets of {1,i,j,k} (up to sign)
///   c: two-point supports {1,v} / {p,pu} with (p,pv,pu,pvu) fully intertwined
///   d: two-point equal-weight supports spanning the same plane
///   e: both pure strategies from {1,i,j,k} (up to sign)
/// Everything is tested after reduction and the canonical translation, so the
/// label describes the equivalence class of the pair.
struct Classification {
    EquilibriumType type = EquilibriumType::Unclassified;
    EquilibriumReport report;
    UnitQuaternion translation = UnitQuaternion::one(); // u of the canonical translation
    std::vector<Atom> canonical_nu; // reduced + translated supports the label was read from
    std::vector<Atom> canonical_mu;
    std::optional<FullIntertwineWitness> intertwine; // filled for two-point pairs
    std::optional<std::array<double, 2>> principal_angles; // filled for two-point pairs
    std::string note;
};

Classification classify(const Game& g, const MixedStrategy& nu, const MixedStrategy& mu,
                        double eq_tol = kEqTol);

/// The pair transform (nu, mu) -> (nu translated right by u, mu translated
/// left by u^-1). Equilibrium verdicts are invariant under it.
std::pair<MixedStrategy, MixedStrategy> translated_pair(const MixedStrategy& nu,
                                                        const MixedStrategy& mu,
                                                        const UnitQuaternion& u);

/// Translates the pair so that the reduced mu support contains +-1: u is the
/// heaviest atom of reduce(mu), ties broken by lexicographically smallest
/// coordinates. Returns (nu * u, u^-1 * mu, u).
struct CanonicalPair {
    MixedStrategy nu;
    MixedStrategy mu;
    UnitQuaternion u;
};

CanonicalPair canonicalize_pair(const MixedStrategy& nu, const MixedStrategy& mu);

struct FoundEquilibrium {
    MixedStrategy nu;
    MixedStrategy mu;
    Classification classification;
};

/// Structured search over the closed-form candidate families:
/// uniform-frame pairs (the standard frame plus n_frames random translates),
/// all 16 pure pairs over {1,i,j,k}, and the three-point indifference
/// candidates over subsets of {1,i,j,k}. Every emitted pair passed
/// verify_equilibrium; output is sorted by type then support.
std::vector<FoundEquilibrium> find_equilibria(const Game& g, uint64_t seed, int n_frames = 3);

namespace detail {

/// Type-(c) pattern test on a canonical reduced pair: mu on {1,v} (up to
/// sign), nu on {p, p u}, with a non-degenerate fully intertwined quadruple
/// (p, pv, pu, pvu). Exposed for tests; classify() gates it on verification.
std::optional<FullIntertwineWitness> match_type_c(const std::vector<Atom>& nu,
                                                  const std::vector<Atom>& mu);

/// Principal angles between the planes spanned by two-point supports.
std::array<double, 2> principal_angles(const std::vector<Atom>& nu, const std::vector<Atom>& mu);

} // namespace detail

} // namespace ewlnash
