"""Coefficient fields.

Two realizations are provided: exact rationals backed by
:class:`fractions.Fraction` and binary floating point with an absolute
tolerance. Elements carry the field they were built over, and all
equality tests go through it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational


class ExactField:
    """Arbitrary-precision rationals; equality is decidable."""

    name = "exact"
    tolerance = 0

    def coerce(self, x):
        """Integral values come back as ``int``, others as ``Fraction``."""
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, int):
            return x
        if isinstance(x, (Rational, str, float)):
            # floats convert to their exact binary value
            x = Fraction(x)
        else:
            raise TypeError(f"cannot use {x!r} as an exact scalar")
        return x.numerator if x.denominator == 1 else x

    def eq(self, a, b) -> bool:
        return a == b

    def is_zero(self, a) -> bool:
        return a == 0

    def __eq__(self, other):
        return isinstance(other, ExactField)

    def __hash__(self):
        return hash("exact")

    def __repr__(self):
        return "EXACT"


@dataclass(frozen=True)
class FloatField:
    """IEEE doubles; comparisons use an absolute tolerance."""

    tolerance: float = 1e-9
    name = "float"

    def coerce(self, x) -> float:
        if isinstance(x, bool):
            raise TypeError("booleans are not scalars")
        if isinstance(x, str):
            return float(Fraction(x))
        return float(x)

    def eq(self, a, b) -> bool:
        return abs(a - b) <= self.tolerance

    def is_zero(self, a) -> bool:
        return abs(a) <= self.tolerance


EXACT = ExactField()
FLOAT = FloatField()


def scalar(x):
    """Normalize a parameter value: ints, strings and fractions become
    exact, floats stay floats."""
    if isinstance(x, float):
        return x
    return EXACT.coerce(x)


def format_scalar(x) -> str:
    if isinstance(x, Fraction):
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, float):
        text = repr(x)
        if "e" in text or "E" in text:
            # literals have no exponent syntax
            text = format(x, ".20f").rstrip("0")
        return text
    return str(x)


def jsonable_scalar(x):
    """Integers stay JSON numbers, other rationals become ``"p/q"`` strings."""
    if isinstance(x, Fraction):
        return x.numerator if x.denominator == 1 else f"{x.numerator}/{x.denominator}"
    if isinstance(x, int):
        return x
    return float(x)
