"""Quaternionic two-by-two quantum games.

Payoff evaluation, strategy reduction, best responses, and Nash-equilibrium
verification and classification, backed by the C++ core.
"""

from ._core import (
    Classification,
    EquilibriumReport,
    Game,
    MixedStrategy,
    Quaternion,
    UnitQuaternion,
    ValidationError,
    best_response_set,
    canonicalize_pair,
    payoff_rule_deviation,
    classify,
    equivalent,
    find_equilibria,
    game_stats,
    intertwined,
    is_generic,
    k_constraint,
    k_function,
    mixed_payoff,
    moment_distance,
    opt_out_distribution,
    quantum_payoff,
    reduce,
    second_moment,
    translate,
    verify_equilibrium,
    __version__,
)

__all__ = [
    "Classification",
    "EquilibriumReport",
    "Game",
    "MixedStrategy",
    "Quaternion",
    "UnitQuaternion",
    "ValidationError",
    "best_response_set",
    "canonicalize_pair",
    "payoff_rule_deviation",
    "classify",
    "equivalent",
    "find_equilibria",
    "game_stats",
    "intertwined",
    "is_generic",
    "k_constraint",
    "k_function",
    "mixed_payoff",
    "moment_distance",
    "opt_out_distribution",
    "quantum_payoff",
    "reduce",
    "second_moment",
    "translate",
    "verify_equilibrium",
    "__version__",
]
