"""Real matrix representations of quaternions, octonions and their complex
extensions, plus the fixed matrices used alongside them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache, wraps
from typing import Sequence

from .algebra import (
    H,
    O,
    ComplexOctonion,
    ComplexQuaternion,
    DomainError,
    Octonion,
    Quaternion,
    oct_split,
    star,
)
from .matrices import Matrix
from .scalars import EXACT


def _memo(fn):
    """Cache on exact (hashable) inputs; tolerance-compared ones bypass it."""
    cached = lru_cache(maxsize=8192)(fn)

    @wraps(fn)
    def wrapper(x):
        try:
            hash(x)
        except TypeError:
            return fn(x)
        return cached(x)
    return wrapper


def _quat_coeffs(q: Quaternion):
    if not isinstance(q, Quaternion):
        raise TypeError("expected a quaternion")
    if q.params != H:
        raise DomainError(f"quaternion representations need H(1,1), got {q.params}")
    return q.coeffs


@_memo
def lambda_(q: Quaternion) -> Matrix:
    """Left representation: ``lambda_(a) @ vec(x) == vec(a x)``."""
    a0, a1, a2, a3 = _quat_coeffs(q)
    return Matrix([
        [a0, -a1, -a2, -a3],
        [a1, a0, -a3, a2],
        [a2, a3, a0, -a1],
        [a3, -a2, a1, a0],
    ])


@_memo
def rho(q: Quaternion) -> Matrix:
    """Right representation: ``rho(a) @ vec(x) == vec(x a)``."""
    a0, a1, a2, a3 = _quat_coeffs(q)
    return Matrix([
        [a0, -a1, -a2, -a3],
        [a1, a0, a3, -a2],
        [a2, -a3, a0, a1],
        [a3, a2, -a1, a0],
    ])


M1 = Matrix.diag([1, -1, -1, -1])
I4 = Matrix.identity(4)
O4 = Matrix.zeros(4)
I8 = Matrix.identity(8)
O8 = Matrix.zeros(8)


@_memo
def Lambda(a: Octonion) -> Matrix:
    """Left representation of a real octonion ``a = q1 + q2 e4``."""
    q1, q2 = oct_split(a)
    return Matrix.block([
        [lambda_(q1), -(rho(q2) @ M1)],
        [lambda_(q2) @ M1, rho(q1)],
    ])


@_memo
def Delta(a: Octonion) -> Matrix:
    """Right representation of a real octonion ``a = q1 + q2 e4``."""
    q1, q2 = oct_split(a)
    return Matrix.block([
        [rho(q1), -lambda_(q2.conj())],
        [lambda_(q2), rho(q1.conj())],
    ])


def Lambda_expanded(a: Octonion) -> Matrix:
    """The 8x8 left representation written out entry by entry.

    Independent transcription of the expanded form; agrees with the block
    assembly in :func:`Lambda`.
    """
    if a.params != O:
        raise DomainError("octonion representations need O(1,1,1)")
    a0, a1, a2, a3, a4, a5, a6, a7 = a.coeffs
    return Matrix([
        [a0, -a1, -a2, -a3, -a4, -a5, -a6, -a7],
        [a1, a0, -a3, a2, -a5, a4, a7, -a6],
        [a2, a3, a0, -a1, -a6, -a7, a4, a5],
        [a3, -a2, a1, a0, -a7, a6, -a5, a4],
        [a4, a5, a6, a7, a0, -a1, -a2, -a3],
        [a5, -a4, a7, -a6, a1, a0, a3, -a2],
        [a6, -a7, -a4, a5, a2, -a3, a0, a1],
        [a7, a6, -a5, -a4, a3, a2, -a1, a0],
    ])


def _complex_quat(Q) -> ComplexQuaternion:
    if isinstance(Q, Quaternion):
        return ComplexQuaternion.of(Q, field=Q.field)
    return Q


def _complex_oct(A) -> ComplexOctonion:
    if isinstance(A, Octonion):
        return ComplexOctonion.of(A, field=A.field)
    return A


def Gamma(Q: ComplexQuaternion) -> Matrix:
    """Left real representation of a complex quaternion ``a + i b``."""
    Q = _complex_quat(Q)
    a, b = Q.re, Q.im
    return Matrix.block([
        [lambda_(a), -lambda_(star(b))],
        [lambda_(b), lambda_(star(a))],
    ])


def Theta(Q: ComplexQuaternion) -> Matrix:
    """Right real representation of a complex quaternion ``a + i b``."""
    Q = _complex_quat(Q)
    a, b = Q.re, Q.im
    return Matrix.block([
        [rho(a), -rho(b)],
        [rho(star(b)), rho(star(a))],
    ])


@_memo
def Phi(A: ComplexOctonion) -> Matrix:
    """Left real representation of a complex octonion ``x + i y``."""
    A = _complex_oct(A)
    x, y = A.re, A.im
    return Matrix.block([
        [Lambda(x), -Lambda(y)],
        [Lambda(star(y)), Lambda(star(x))],
    ])


@_memo
def Psi(A: ComplexOctonion) -> Matrix:
    """Right real representation of a complex octonion ``x + i y``."""
    A = _complex_oct(A)
    x, y = A.re, A.im
    return Matrix.block([
        [Delta(x), -Delta(y)],
        [Delta(star(y)), Delta(star(x))],
    ])


def vec(x) -> tuple:
    """Coefficient column of a real quaternion or octonion."""
    return tuple(x.coeffs)


def vec16(A: ComplexOctonion) -> tuple:
    A = _complex_oct(A)
    return tuple(A.re.coeffs) + tuple(A.im.coeffs)


def unvec(column: Sequence, field=EXACT):
    """Octonion (length 8) or complex octonion (length 16) from a column."""
    column = tuple(column)
    if len(column) == 8:
        return Octonion(column, O, field)
    if len(column) == 16:
        return ComplexOctonion(Octonion(column[:8], O, field), Octonion(column[8:], O, field))
    if len(column) == 4:
        return Quaternion(column, H, field)
    raise ValueError("column length must be 4, 8 or 16")


_THETA_PRINTED = Matrix([
    [0, -1, 0, 0, 0, 0, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, -1, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, -1, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, -1, 0],
])

_T = Matrix.block([[M1, O4], [O4, I4]])

CONSTANTS: dict[str, Matrix] = {
    "M1": M1,
    "L1": Matrix([
        [0, -1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, -1],
        [0, 0, 1, 0],
    ]),
    "R1": Matrix([
        [0, -1, 0, 0],
        [1, 0, 0, 0],
        [0, 0, 0, 1],
        [0, 0, -1, 0],
    ]),
    "eps": Matrix.diag([1, 1, 1, 1, -1, -1, -1, -1]),
    "tau": Matrix.diag([1, 1, -1, -1, 1, 1, -1, -1]),
    "sigma": Matrix.diag([1, 1, -1, -1]),
    "theta": _THETA_PRINTED,
    "T": _T,
    "S": Matrix.block([[_T, O8], [O8, _T]]),
}

_ALIASES = {"epsilon": "eps", "ε": "eps", "τ": "tau", "σ": "sigma", "θ": "theta",
            "m1": "M1", "l1": "L1", "r1": "R1", "t": "T", "s": "S"}


def const_matrix(name: str) -> Matrix:
    key = _ALIASES.get(name, name)
    try:
        return CONSTANTS[key]
    except KeyError:
        raise KeyError(f"unknown constant matrix {name!r}; known: {', '.join(CONSTANTS)}") from None


# Columns of octonions, as used for the M and N identities.

@dataclass(frozen=True)
class OctColumn:
    entries: tuple

    def __post_init__(self):
        entries = tuple(self.entries)
        if len(entries) != 8 or not all(isinstance(e, Octonion) and e.params == O for e in entries):
            raise ValueError("an octonion column holds 8 elements of O(1,1,1)")
        object.__setattr__(self, "entries", entries)

    def __getitem__(self, k):
        return self.entries[k]

    def __iter__(self):
        return iter(self.entries)


def _units(sign: int, field=EXACT) -> OctColumn:
    return OctColumn(tuple(
        Octonion.basis(k, O, field) * (1 if k == 0 else sign) for k in range(8)
    ))


N_COLUMN = _units(+1)
M_COLUMN = _units(-1)


def mat_apply_octcolumn(R: Matrix, C: OctColumn) -> OctColumn:
    """Row ``r`` of the result is ``sum_k R[r, k] * C[k]``."""
    zero = Octonion.zero(O, C[0].field)
    out = []
    for row in R.rows:
        acc = zero
        for coef, entry in zip(row, C):
            if coef:
                acc = acc + entry * coef
        out.append(acc)
    return OctColumn(tuple(out))


def octcolumn_scale_right(C: OctColumn, a: Octonion) -> OctColumn:
    return OctColumn(tuple(c * a for c in C))


def octcolumn_scale_left(a: Octonion, C: OctColumn) -> OctColumn:
    return OctColumn(tuple(a * c for c in C))


def octcolumn_contract(N: OctColumn, M: OctColumn) -> Octonion:
    """``N^t M = sum_k N[k] M[k]``."""
    acc = Octonion.zero(O, N[0].field)
    for n, m in zip(N, M):
        acc = acc + n * m
    return acc


REP_MAPS = {
    "lambda": lambda_,
    "rho": rho,
    "Lambda": Lambda,
    "Delta": Delta,
    "Gamma": Gamma,
    "Theta": Theta,
    "Phi": Phi,
    "Psi": Psi,
}
