"""Truncated q-hypergeometric sums, weight factors and the statement registry."""

from .identities import IDENTITIES, identity_ids, run_identity
from .runner import POOL, ParamSampler, TrialResult, certify_grid, evaluate, run_statement
from .series import SeriesSpec, phi_series
from .statements import (
    ParamSlot,
    StatementSpec,
    get_statement,
    statement_ids,
    statement_lhs,
    statement_modulus,
    statement_rhs,
)
from .terms import Bag, HyperSum, Pochhammer, hyper_sum, qpow, qproduct
from .weights import bracket_weight, lhopital_check, omega_factor, r_factor, s_factor

__all__ = [
    "Bag", "HyperSum", "Pochhammer", "hyper_sum", "qpow", "qproduct",
    "SeriesSpec", "phi_series",
    "ParamSlot", "StatementSpec", "get_statement", "statement_ids",
    "statement_lhs", "statement_rhs", "statement_modulus",
    "bracket_weight", "omega_factor", "r_factor", "s_factor", "lhopital_check",
    "IDENTITIES", "identity_ids", "run_identity",
    "POOL", "ParamSampler", "TrialResult", "certify_grid", "evaluate", "run_statement",
]
