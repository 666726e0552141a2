"""Statevector checks of the card-game oracle and exact payoff analysis."""

from ._core import (
    GameResult,
    Gate1Q,
    InvalidStateError,
    Rational,
    StateVector,
    Strategy,
    UnsupportedSizeError,
    __version__,
    analytic_payoff,
    apply_1q,
    apply_cz,
    basis_state,
    enumerate_outcomes,
    fidelity,
    inner_product,
    make_gate_h,
    make_gate_u,
    mc_payoff,
    measure_all_distribution,
    minority_card_index,
    run_fig1_oracle,
    run_fig2_equivalent,
    single_card_identity,
    states_equal,
    verify_triviality,
)

__all__ = [
    "GameResult",
    "Gate1Q",
    "InvalidStateError",
    "Rational",
    "StateVector",
    "Strategy",
    "UnsupportedSizeError",
    "__version__",
    "analytic_payoff",
    "apply_1q",
    "apply_cz",
    "basis_state",
    "enumerate_outcomes",
    "fidelity",
    "inner_product",
    "make_gate_h",
    "make_gate_u",
    "mc_payoff",
    "measure_all_distribution",
    "minority_card_index",
    "run_fig1_oracle",
    "run_fig2_equivalent",
    "single_card_identity",
    "states_equal",
    "verify_triviality",
]
