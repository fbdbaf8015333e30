#pragma once

#include <span>
#include <utility>
#include <vector>

#include "ewlnash/game.hpp"
#include "ewlnash/quaternion.hpp"

namespace ewlnash {

inline constexpr double kEquivTol = 1e-9;     // max-norm on moment matrices
inline constexpr double kWeightFloor = 1e-12; // atoms below this are dropped by reduce
inline constexpr double kPsdTol = 1e-10;

struct Atom {
    UnitQuaternion point;
    double weight = 0.0;
};

/// A finitely supported probability distribution on the unit quaternions.
/// Weights must be nonnegative and sum to 1 within 1e-9.
class MixedStrategy {
public:
    explicit MixedStrategy(std::vector<Atom> atoms, const char* field = "strategy");

    static MixedStrategy point_mass(const UnitQuaternion& q);
    /// Weight 1/4 on each member of the frame.
    static MixedStrategy uniform(const OrthoFrame& frame);

    std::span<const Atom> atoms() const { return atoms_; }
    size_t size() const { return atoms_.size(); }

private:
    std::vector<Atom> atoms_;
};

/// Second-moment matrix S = sum_atoms w * q q^T: symmetric, positive
/// semidefinite, trace 1. Every payoff in every game is a linear functional
/// of S, so it is a complete summary of the strategy.
Mat4 second_moment(const MixedStrategy& mu);

/// Max-norm distance between the two second-moment matrices.
double moment_distance(const MixedStrategy& a, const MixedStrategy& b);

/// Payoff-indistinguishability: equal second moments within tol.
bool equivalent(const MixedStrategy& a, const MixedStrategy& b, double tol = kEquivTol);

/// Equivalent strategy on at most four mutually orthogonal atoms: the
/// eigenvectors of the second-moment matrix weighted by its eigenvalues.
/// Atoms with weight below kWeightFloor are dropped and the rest renormalized.
/// Eigenvector signs are fixed with the first nonzero coordinate positive.
MixedStrategy reduce(const MixedStrategy& mu);

enum class Side { Left, Right };

/// Translate of a strategy by the unit u: atoms map to u^-1 * x (Left) or
/// x * u^-1 (Right), matching the pushforward (nu u)(A) = nu(A u).
MixedStrategy translate(const MixedStrategy& mu, const UnitQuaternion& u, Side side);

/// Expected payoffs when Player One plays nu and Player Two plays mu.
std::pair<double, double> mixed_payoff(const Game& g, const MixedStrategy& nu,
                                       const MixedStrategy& mu);

} // namespace ewlnash
