"""Unfolding moves and their invariants."""

from tits.alternative.folding.unfold import (
    FoldingReport,
    UnfoldStep,
    compose_quotient,
    unfold_all,
    unfold_once,
    verify_folding_properties,
)

__all__ = [
    "FoldingReport",
    "UnfoldStep",
    "compose_quotient",
    "unfold_all",
    "unfold_once",
    "verify_folding_properties",
]
