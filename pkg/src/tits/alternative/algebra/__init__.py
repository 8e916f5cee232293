"""Exact angle arithmetic and free-group words."""

from tits.alternative.algebra.angle import (
    HALF_PI,
    PI,
    TWO_PI,
    ZERO,
    AngleExpr,
    AtomEnv,
    angle_add,
    compare,
    is_pi_commensurable,
    mod_pi_rational,
    numeric_value,
    parse_angle,
    pi_times,
)
from tits.alternative.algebra.words import (
    Word,
    conjugate,
    cyclic_reduce,
    format_word,
    free_reduce,
    inverse,
    reduced_words,
)

__all__ = [
    "Word",
    "conjugate",
    "cyclic_reduce",
    "format_word",
    "free_reduce",
    "inverse",
    "reduced_words",
    "AngleExpr",
    "AtomEnv",
    "HALF_PI",
    "PI",
    "TWO_PI",
    "ZERO",
    "angle_add",
    "compare",
    "is_pi_commensurable",
    "mod_pi_rational",
    "numeric_value",
    "parse_angle",
    "pi_times",
]
