"""Exact egalitarian judgment aggregation.

Judgments are bitstrings such as "0110", one character per issue.
"""

from ._egal import (
    BudgetExceeded,
    CapacityError,
    DimensionError,
    EgalError,
    ParseError,
    check_axiom,
    emit_asp,
    find_manipulation,
    gadget,
    hamming,
    instance_outcome,
    outcome,
    verify_gadget,
)

__all__ = [
    "BudgetExceeded",
    "CapacityError",
    "DimensionError",
    "EgalError",
    "ParseError",
    "check_axiom",
    "emit_asp",
    "find_manipulation",
    "gadget",
    "hamming",
    "instance_outcome",
    "outcome",
    "verify_gadget",
]
