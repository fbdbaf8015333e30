#pragma once

#include <cstdint>
#include <random>

#include "ewlnash/game.hpp"
#include "ewlnash/quaternion.hpp"
#include "ewlnash/strategy.hpp"

namespace ewlnash {

/// Deterministic random source. All draws are derived from raw mt19937_64
/// output with fixed arithmetic (no std distributions), so a seed produces
/// the same stream on every platform and standard library.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double gaussian();

    UnitQuaternion unit_quaternion();

    /// Random orthonormal frame: the images of 1, i, j, k under two-sided
    /// multiplication by random units.
    OrthoFrame frame();

    /// Payoffs uniform in [-10, 10].
    Game game();
    /// Resamples until the genericity test passes.
    Game generic_game();
    /// Generic game with Y = -X.
    Game generic_zero_sum_game();

    /// Up to max_atoms random atoms with uniform-normalized weights.
    MixedStrategy strategy(int max_atoms);

private:
    std::mt19937_64 gen_;
    bool have_spare_ = false;
    double spare_ = 0.0;
};

} // namespace ewlnash
