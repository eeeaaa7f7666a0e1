"""Exact generalized quaternion and octonion arithmetic, their real matrix
representations, and invertible elements of split algebras built from
third-order recurrences."""

from .algebra import (
    H,
    O,
    AlgebraError,
    ComplexOctonion,
    ComplexQuaternion,
    DomainError,
    Octonion,
    OctParams,
    ParamsMismatchError,
    Quaternion,
    QuatParams,
    classify,
    coct_mul_central,
    coct_mul_paper,
    oct_split,
    plus_sub,
    plus_sup,
    star,
    tilde,
)
from .scalars import EXACT, FLOAT, FloatField
from .zorn import ZornElement, zorn_mul

__version__ = "0.1.0"
