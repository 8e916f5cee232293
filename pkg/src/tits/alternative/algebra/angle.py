"""Exact angles in the ℚ-span of π and declared irrational atoms.

An :class:`AngleExpr` is ``pi_coeff·π + Σ coeff·atom`` with every coefficient a
:class:`fractions.Fraction`. Atoms are names whose numeric values live in an
:class:`AtomEnv`; they are *declared* independent of π and of each other, and
nothing here tries to discover hidden relations between their values.
"""

from __future__ import annotations

import math
from collections.abc import Iterator, Mapping
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Union

from tits.alternative.exceptions import MalformedDocument, UnknownAtom

Rational = Union[Fraction, int]


@dataclass(frozen=True)
class AngleExpr:
    """An exact angle.

    Attributes:
        pi_coeff: Coefficient of π.
        atom_terms: ``(atom, coefficient)`` pairs sorted by atom name; zero
            coefficients never appear.
    """

    pi_coeff: Fraction = Fraction(0)
    atom_terms: tuple[tuple[str, Fraction], ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "pi_coeff", Fraction(self.pi_coeff))
        merged: dict[str, Fraction] = {}
        for name, coeff in self.atom_terms:
            merged[name] = merged.get(name, Fraction(0)) + Fraction(coeff)
        object.__setattr__(self, "atom_terms", tuple(sorted((k, v) for k, v in merged.items() if v != 0)))

    @classmethod
    def of(cls, pi: Rational | str = 0, atoms: Mapping[str, Rational | str] | None = None) -> AngleExpr:
        """Build an angle from a π coefficient and an atom map."""
        return cls(Fraction(pi), tuple((name, Fraction(c)) for name, c in (atoms or {}).items()))

    @classmethod
    def atom(cls, name: str, coeff: Rational = 1) -> AngleExpr:
        """A single atom term."""
        return cls(Fraction(0), ((name, Fraction(coeff)),))

    @property
    def atoms(self) -> dict[str, Fraction]:
        """Atom coefficients as a fresh dict."""
        return dict(self.atom_terms)

    def __add__(self, other: AngleExpr) -> AngleExpr:
        if not isinstance(other, AngleExpr):
            return NotImplemented
        return AngleExpr(self.pi_coeff + other.pi_coeff, self.atom_terms + other.atom_terms)

    def __neg__(self) -> AngleExpr:
        return AngleExpr(-self.pi_coeff, tuple((k, -v) for k, v in self.atom_terms))

    def __sub__(self, other: AngleExpr) -> AngleExpr:
        if not isinstance(other, AngleExpr):
            return NotImplemented
        return self + (-other)

    def __mul__(self, scalar: Rational) -> AngleExpr:
        if not isinstance(scalar, (int, Fraction)):
            return NotImplemented
        s = Fraction(scalar)
        return AngleExpr(self.pi_coeff * s, tuple((k, v * s) for k, v in self.atom_terms))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return self.pi_coeff != 0 or bool(self.atom_terms)

    def is_pi_commensurable(self) -> bool:
        """True iff the angle is a rational multiple of π."""
        return not self.atom_terms

    def mod_pi_rational(self) -> AngleExpr:
        """Canonical representative modulo πℚ: the atom part alone."""
        return AngleExpr(Fraction(0), self.atom_terms)

    def normalized(self) -> AngleExpr:
        """Reduce the π coefficient into [0, 2)."""
        return AngleExpr(self.pi_coeff % 2, self.atom_terms)

    def numeric(self, env: AtomEnv | None = None) -> float:
        """Numeric value in radians.

        Raises:
            UnknownAtom: An atom term is missing from ``env``.
        """
        total = float(self.pi_coeff) * math.pi
        for name, coeff in self.atom_terms:
            if env is None or name not in env:
                raise UnknownAtom(name)
            total += float(coeff) * env[name]
        return total

    def to_document(self) -> dict[str, Any]:
        """The file-format literal ``{"pi": "p/q", "atoms": {...}}``."""
        doc: dict[str, Any] = {"pi": _fraction_str(self.pi_coeff)}
        if self.atom_terms:
            doc["atoms"] = {k: _fraction_str(v) for k, v in self.atom_terms}
        return doc

    def __str__(self) -> str:
        terms = []
        if self.pi_coeff != 0:
            terms.append(_scaled(self.pi_coeff, "π"))
        terms.extend(_scaled(coeff, name) for name, coeff in self.atom_terms)
        if not terms:
            return "0"
        text = terms[0]
        for term in terms[1:]:
            text += f" - {term[1:]}" if term.startswith("-") else f" + {term}"
        return text


ZERO = AngleExpr()
PI = AngleExpr(Fraction(1))
HALF_PI = AngleExpr(Fraction(1, 2))
TWO_PI = AngleExpr(Fraction(2))


def pi_times(coeff: Rational | str) -> AngleExpr:
    """``coeff·π``."""
    return AngleExpr(Fraction(coeff))


def angle_add(a: AngleExpr, b: AngleExpr) -> AngleExpr:
    """Exact sum; the functional spelling of ``a + b``."""
    return a + b


def numeric_value(a: AngleExpr, env: AtomEnv | None) -> float:
    """Numeric value of ``a`` under ``env``."""
    return a.numeric(env)


def mod_pi_rational(a: AngleExpr) -> AngleExpr:
    """``a`` modulo πℚ."""
    return a.mod_pi_rational()


def is_pi_commensurable(a: AngleExpr) -> bool:
    """True iff ``a`` is a rational multiple of π."""
    return a.is_pi_commensurable()


def compare(a: AngleExpr, b: AngleExpr, env: AtomEnv | None, tolerance: float = 1e-9) -> int:
    """Sign of ``a - b``.

    Exact when the difference is a rational multiple of π. Otherwise the
    numeric difference decides, and values within ``tolerance`` compare equal.
    """
    diff = a - b
    if diff.is_pi_commensurable():
        return (diff.pi_coeff > 0) - (diff.pi_coeff < 0)
    value = diff.numeric(env)
    if abs(value) <= tolerance:
        return 0
    return 1 if value > 0 else -1


def parse_angle(literal: Any) -> AngleExpr:
    """Parse an angle literal.

    Accepts ``{"pi": "p/q", "atoms": {"alpha": "r/s"}}`` and the shorthand
    ``"p/q"`` (or a bare int) for a rational multiple of π.

    Raises:
        MalformedDocument: The literal is not one of those shapes.
    """
    try:
        if isinstance(literal, Mapping):
            unknown = set(literal) - {"pi", "atoms"}
            if unknown:
                raise MalformedDocument(f"Unexpected angle keys {sorted(unknown)}")
            atoms = literal.get("atoms") or {}
            if not isinstance(atoms, Mapping):
                raise MalformedDocument("Angle 'atoms' must be a map of atom name to rational")
            return AngleExpr.of(_parse_fraction(literal.get("pi", 0)), {k: _parse_fraction(v) for k, v in atoms.items()})
        return pi_times(_parse_fraction(literal))
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        if isinstance(exc, MalformedDocument):
            raise
        raise MalformedDocument(f"Bad angle literal {literal!r}: {exc}") from exc


class AtomEnv(Mapping[str, float]):
    """Numeric values of the declared atoms, all finite and positive."""

    def __init__(self, values: Mapping[str, float] | None = None) -> None:
        self._values: dict[str, float] = {}
        for name, value in (values or {}).items():
            value = float(value)
            if not name or not math.isfinite(value) or value <= 0:
                raise MalformedDocument(f"Atom '{name}' must have a finite positive value, got {value}")
            self._values[name] = value

    def __getitem__(self, name: str) -> float:
        return self._values[name]

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self._values))

    def __len__(self) -> int:
        return len(self._values)

    def __repr__(self) -> str:
        return f"AtomEnv({self._values!r})"

    def to_document(self) -> dict[str, float]:
        """Plain dict, sorted by name."""
        return {k: self._values[k] for k in self}


def _parse_fraction(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError("coefficients are exact rationals; write them as 'p/q' strings or ints")
    return Fraction(value)


def _fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


def _scaled(coeff: Fraction, symbol: str) -> str:
    sign = "-" if coeff < 0 else ""
    num, den = abs(coeff.numerator), coeff.denominator
    head = symbol if num == 1 else f"{num}{symbol}"
    return f"{sign}{head}" if den == 1 else f"{sign}{head}/{den}"
