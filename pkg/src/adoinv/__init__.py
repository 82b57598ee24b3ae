"""Coloured Alexander (ADO) invariants from braids, computed two ways."""

from .ado import AdoResult, KNOTS, ado_direct, ado_topological, markov_check, specialize_invariant
from .verma import BraidWord, writhe

__all__ = [
    "AdoResult",
    "BraidWord",
    "KNOTS",
    "ado_direct",
    "ado_topological",
    "markov_check",
    "specialize_invariant",
    "writhe",
]
