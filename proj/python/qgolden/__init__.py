"""Exact q-Fibonacci polynomials, the q-golden ratio series, and identity verifiers.

All values are exact: big integers come back as Python ints, series as lists
of ints (coefficient of q^k at index k), and the check_* functions return
VerificationReport objects that are truthy when the identity holds.
"""

from ._core import (
    VerificationReport,
    __version__,
    binomial,
    catalan,
    catalan_closed,
    check_reciprocal_form,
    check_sw,
    check_theorem,
    composition_count,
    compositions,
    fibonacci,
    golden_ratio_numeric,
    phi_reciprocal_series,
    phi_series,
    qfib_at_one,
    qfib_closed,
    qfib_recursive,
    ratio_series,
    sw_geometric,
    sw_gf_coefficient,
    sw_lhs,
    sw_rhs,
)

__all__ = [
    "VerificationReport",
    "__version__",
    "binomial",
    "catalan",
    "catalan_closed",
    "check_reciprocal_form",
    "check_sw",
    "check_theorem",
    "composition_count",
    "compositions",
    "fibonacci",
    "golden_ratio_numeric",
    "phi_reciprocal_series",
    "phi_series",
    "qfib_at_one",
    "qfib_closed",
    "qfib_recursive",
    "ratio_series",
    "sw_geometric",
    "sw_gf_coefficient",
    "sw_lhs",
    "sw_rhs",
]
