"""Drawings of the product of two cycles.

Thin wrapper over the compiled core: generate the reference drawing,
perturb it, analyze robustness, emit certificates, solve small cases
exactly, and evaluate the closed-form lower bounds.
"""

import json as _json

from crossring._crossring import (  # noqa: F401
    BudgetError,
    Drawing,
    FalsificationError,
    ParseError,
    PreconditionError,
    ValidationError,
    analyze,
    canonical,
    certify_json,
    exact_crossing_number,
    hks_lower_bound,
)

__all__ = [
    "BudgetError",
    "Drawing",
    "FalsificationError",
    "ParseError",
    "PreconditionError",
    "ValidationError",
    "analyze",
    "canonical",
    "certify",
    "certify_json",
    "exact_crossing_number",
    "hks_lower_bound",
]


def certify(drawing):
    """Certificate for a drawing, as a dict. See certify_json for the raw text."""
    return _json.loads(certify_json(drawing))
