"""Exact normal ordering, universal polynomials and qGHA modules."""

import json

from ._weylcomb import (
    ParseError,
    bell,
    closed_form,
    coefficients,
    eulerian,
    generalized_stirling,
    modp_all_zero,
    normal_order,
    ode_solve,
    qgha_classify,
    run_cli,
    stirling1,
    stirling2,
    universal_power,
    young_check,
)


def classify(ring, q, f, g, n_max=10):
    """Simple modules of H_q(f, g) as dicts (matrices row-major)."""
    return [json.loads(s) for s in qgha_classify(ring, str(q), f, g, n_max)]


__all__ = [
    "ParseError",
    "bell",
    "classify",
    "closed_form",
    "coefficients",
    "eulerian",
    "generalized_stirling",
    "modp_all_zero",
    "normal_order",
    "ode_solve",
    "qgha_classify",
    "run_cli",
    "stirling1",
    "stirling2",
    "universal_power",
    "young_check",
]
