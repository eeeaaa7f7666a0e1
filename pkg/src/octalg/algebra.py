"""Generalized quaternion and octonion algebras over a coefficient field.

Multiplication is driven by the structure-constant tables below, kept in
the same row/column layout as the published tables. A cell such as
``-ab e4`` reads "minus alpha*beta times e4"; a bare parameter product such
as ``-abg`` is a scalar. Parameter letters: ``a``=alpha (beta1 for
quaternions), ``b``=beta (beta2), ``g``=gamma.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .scalars import EXACT, format_scalar, scalar


class AlgebraError(Exception):
    pass


class ParamsMismatchError(AlgebraError, ValueError):
    """Operands belong to different algebras (or fields)."""


class DomainError(AlgebraError, ValueError):
    """An operation defined only on the division algebra got other params."""


QUAT_TABLE = """
    1     e1     e2      e3
    e1    -a     e3     -ae2
    e2    -e3    -b      be1
    e3    ae2    -be1   -ab
"""

OCT_TABLE = """
    1     e1     e2     e3     e4     e5     e6     e7
    e1    -a     e3    -ae2    e5    -ae4   -e7     ae6
    e2    -e3    -b     be1    e6     e7    -be4   -be5
    e3    ae2   -be1   -ab     e7    -ae6    be5   -abe4
    e4    -e5   -e6    -e7    -g      ge1    ge2    ge3
    e5    ae4   -e7     ae6   -ge1   -ag    -ge3    age2
    e6    e7     be4   -be5   -ge2    ge3   -bg    -bge1
    e7    -ae6   be5    abe4  -ge3   -age2   bge1  -abg
"""

_CELL = re.compile(r"^([+-]?)([abg]*)(?:e([1-7]))?$")


def _parse_table(text: str) -> list[list[tuple[int, str, int]]]:
    """Cells become ``(sign, parameter letters, target basis index)``."""
    rows = []
    for line in text.strip().splitlines():
        row = []
        for cell in line.split():
            if cell in ("1", "+1", "-1"):
                row.append((-1 if cell.startswith("-") else 1, "", 0))
                continue
            m = _CELL.match(cell)
            if not m or (not m.group(2) and not m.group(3)):
                raise ValueError(f"bad table cell {cell!r}")
            sign = -1 if m.group(1) == "-" else 1
            row.append((sign, m.group(2), int(m.group(3) or 0)))
        rows.append(row)
    return rows


QUAT_CELLS = _parse_table(QUAT_TABLE)
OCT_CELLS = _parse_table(OCT_TABLE)


@dataclass(frozen=True)
class QuatParams:
    beta1: object = 1
    beta2: object = 1

    def __post_init__(self):
        object.__setattr__(self, "beta1", scalar(self.beta1))
        object.__setattr__(self, "beta2", scalar(self.beta2))

    @property
    def letters(self) -> dict:
        return {"a": self.beta1, "b": self.beta2}

    def as_dict(self) -> dict:
        return {"beta1": self.beta1, "beta2": self.beta2}

    def values(self) -> tuple:
        return (self.beta1, self.beta2)


@dataclass(frozen=True)
class OctParams:
    alpha: object = 1
    beta: object = 1
    gamma: object = 1

    def __post_init__(self):
        for name in ("alpha", "beta", "gamma"):
            object.__setattr__(self, name, scalar(getattr(self, name)))

    @property
    def letters(self) -> dict:
        return {"a": self.alpha, "b": self.beta, "g": self.gamma}

    def as_dict(self) -> dict:
        return {"alpha": self.alpha, "beta": self.beta, "gamma": self.gamma}

    def values(self) -> tuple:
        return (self.alpha, self.beta, self.gamma)


H = QuatParams(1, 1)
O = OctParams(1, 1, 1)


@lru_cache(maxsize=None)
def structure_constants(params) -> tuple:
    """``table[i][j] = (coefficient, k)`` with ``e_i e_j = coefficient * e_k``."""
    cells = QUAT_CELLS if isinstance(params, QuatParams) else OCT_CELLS
    letters = params.letters
    out = []
    for row in cells:
        out_row = []
        for sign, word, k in row:
            c = sign
            for ch in word:
                c = c * letters[ch]
            out_row.append((c, k))
        out.append(tuple(out_row))
    return tuple(out)


def classify(params) -> str:
    """``"division"``, ``"split"`` or ``"degenerate"`` (some parameter is
    zero, so the norm form is singular and the algebra is not a
    composition algebra candidate)."""
    vals = params.values()
    if any(v == 0 for v in vals):
        return "degenerate"
    return "division" if all(v > 0 for v in vals) else "split"


class _Hypercomplex:
    """Shared arithmetic for structure-constant algebras of dimension 4 and 8."""

    dim: int
    params_type: type
    units: tuple[str, ...]

    __slots__ = ("coeffs", "params", "field")

    def __init__(self, coeffs: Sequence, params=None, field=EXACT):
        if params is None:
            params = self.params_type()
        if not isinstance(params, self.params_type):
            raise TypeError(f"{type(self).__name__} needs {self.params_type.__name__}")
        coeffs = tuple(field.coerce(c) for c in coeffs)
        if len(coeffs) != self.dim:
            raise ValueError(f"expected {self.dim} coefficients, got {len(coeffs)}")
        object.__setattr__(self, "coeffs", coeffs)
        object.__setattr__(self, "params", params)
        object.__setattr__(self, "field", field)

    def __setattr__(self, name, value):
        raise AttributeError("elements are immutable")

    @classmethod
    def basis(cls, k: int, params=None, field=EXACT):
        c = [0] * cls.dim
        c[k] = 1
        return cls(c, params, field)

    @classmethod
    def scalar(cls, value, params=None, field=EXACT):
        return cls([value] + [0] * (cls.dim - 1), params, field)

    @classmethod
    def zero(cls, params=None, field=EXACT):
        return cls([0] * cls.dim, params, field)

    def _new(self, coeffs):
        return type(self)(coeffs, self.params, self.field)

    def _check(self, other):
        if type(other) is not type(self):
            raise TypeError(f"cannot combine {type(self).__name__} with {type(other).__name__}")
        if other.params != self.params:
            raise ParamsMismatchError(f"params differ: {self.params} vs {other.params}")
        if other.field != self.field:
            raise ParamsMismatchError("coefficient fields differ")

    def __add__(self, other):
        self._check(other)
        return self._new([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other):
        self._check(other)
        return self._new([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self):
        return self._new([-a for a in self.coeffs])

    def __mul__(self, other):
        if isinstance(other, _Hypercomplex):
            return self.mul(other)
        return self._new([a * other for a in self.coeffs])

    def __rmul__(self, other):
        return self._new([other * a for a in self.coeffs])

    def mul(self, other):
        self._check(other)
        table = structure_constants(self.params)
        out = [0] * self.dim
        x, y = self.coeffs, other.coeffs
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = table[i]
            for j, yj in enumerate(y):
                if yj:
                    c, k = row[j]
                    out[k] += c * xi * yj
        return self._new(out)

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.params != self.params:
            return False
        eq = self.field.eq
        return all(eq(a, b) for a, b in zip(self.coeffs, other.coeffs))

    def __hash__(self):
        if self.field is not EXACT:
            raise TypeError("tolerance-compared elements are unhashable")
        return hash((type(self).__name__, self.coeffs, self.params))

    def __iter__(self):
        return iter(self.coeffs)

    def __getitem__(self, k):
        return self.coeffs[k]

    def __repr__(self):
        return f"{type(self).__name__}({self}, {self.params})"

    def __str__(self):
        return format_terms(self.coeffs, self.units)

    def is_zero(self) -> bool:
        return all(self.field.is_zero(a) for a in self.coeffs)

    def conj(self):
        return self._new([self.coeffs[0]] + [-a for a in self.coeffs[1:]])

    def trace(self):
        return 2 * self.coeffs[0]

    def norm_weights(self) -> tuple:
        # -(e_k^2), read off the table diagonal.
        table = structure_constants(self.params)
        return tuple(-table[k][k][0] if k else 1 for k in range(self.dim))

    def norm(self):
        return sum(w * a * a for w, a in zip(self.norm_weights(), self.coeffs))

    def signed(self, pattern: Sequence[int]):
        return self._new([s * a for s, a in zip(pattern, self.coeffs)])


class Quaternion(_Hypercomplex):
    dim = 4
    params_type = QuatParams
    units = ("", "e1", "e2", "e3")
    __slots__ = ()

    def star(self):
        """``q0 + q1 e1 - q2 e2 - q3 e3``."""
        return self.signed(STAR4)


class Octonion(_Hypercomplex):
    dim = 8
    params_type = OctParams
    units = ("", "e1", "e2", "e3", "e4", "e5", "e6", "e7")
    __slots__ = ()

    def star(self):
        return star(self)


def format_terms(coeffs, units) -> str:
    parts = []
    for c, u in zip(coeffs, units):
        if c == 0:
            continue
        neg = c < 0
        mag = format_scalar(-c if neg else c)
        if not u:
            body = mag
        elif mag == "1":
            body = u
        elif "/" in mag or "." in mag:
            body = f"{mag}*{u}"
        else:
            body = f"{mag}{u}"
        if parts:
            parts.append(("- " if neg else "+ ") + body)
        else:
            parts.append(("-" if neg else "") + body)
    return " ".join(parts) if parts else "0"


def quat_mul(p: Quaternion, q: Quaternion) -> Quaternion:
    return p.mul(q)


def oct_mul(p: Octonion, q: Octonion) -> Octonion:
    return p.mul(q)


def conj(a):
    return a.conj()


def trace(a):
    return a.trace()


def norm(a):
    return a.norm()


def cayley_dickson_mul(p: Octonion, q: Octonion) -> Octonion:
    """Octonion product rebuilt by doubling the quaternion algebra.

    With ``p = a + b e4`` and ``q = c + d e4`` (``a, b, c, d`` in
    ``H(alpha, beta)``)::

        pq = (ac - gamma * conj(d) b) + (da + b conj(c)) e4

    Independent of the octonion table; used to cross-check it.
    """
    p._check(q)
    hp = QuatParams(p.params.alpha, p.params.beta)
    a = Quaternion(p.coeffs[:4], hp, p.field)
    b = Quaternion(p.coeffs[4:], hp, p.field)
    c = Quaternion(q.coeffs[:4], hp, p.field)
    d = Quaternion(q.coeffs[4:], hp, p.field)
    first = a * c - (d.conj() * b) * p.params.gamma
    second = d * a + b * c.conj()
    return Octonion(first.coeffs + second.coeffs, p.params, p.field)


# Sign patterns of the involutions on O = O(1,1,1) in the basis (1, e1, ..., e7).
STAR4 = (1, 1, -1, -1)
STAR8 = (1, 1, -1, -1, -1, -1, -1, -1)
TILDE8 = (1, 1, 1, 1, -1, -1, -1, -1)
PLUS_SUB8 = (1, 1, -1, -1, 1, 1, -1, -1)
PLUS_SUP8 = (1, -1, -1, -1, 1, 1, 1, 1)


def _require_division(a):
    expected = H if isinstance(a, Quaternion) else O
    if a.params != expected:
        raise DomainError(f"defined on the division algebra only, got {a.params}")


def oct_split(a: Octonion) -> tuple[Quaternion, Quaternion]:
    """``a = q1 + q2 e4`` with ``q1, q2`` in H."""
    _require_division(a)
    return Quaternion(a.coeffs[:4], H, a.field), Quaternion(a.coeffs[4:], H, a.field)


def oct_join(q1: Quaternion, q2: Quaternion) -> Octonion:
    """Inverse of :func:`oct_split`, computed as ``q1 + q2 * e4`` in O."""
    field = q1.field
    lift1 = Octonion(q1.coeffs + (0,) * 4, O, field)
    lift2 = Octonion(q2.coeffs + (0,) * 4, O, field)
    return lift1 + lift2 * Octonion.basis(4, O, field)


def star(a):
    """Negate every coefficient except those of 1 and e1."""
    if isinstance(a, Quaternion):
        return a.signed(STAR4)
    _require_division(a)
    return a.signed(STAR8)


def tilde(a: Octonion) -> Octonion:
    """``q1 - q2 e4``."""
    _require_division(a)
    return a.signed(TILDE8)


def plus_sub(a: Octonion) -> Octonion:
    """``q1* + q2* e4``."""
    _require_division(a)
    return a.signed(PLUS_SUB8)


def plus_sup(a: Octonion) -> Octonion:
    """``conj(q1) + q2 e4``."""
    _require_division(a)
    return a.signed(PLUS_SUP8)


@dataclass(frozen=True)
class ComplexQuaternion:
    """``re + i im`` with ``i`` the central complex unit."""

    re: Quaternion
    im: Quaternion

    def __post_init__(self):
        for part in (self.re, self.im):
            if not isinstance(part, Quaternion):
                raise TypeError("complex quaternion parts must be quaternions")
            _require_division(part)

    @classmethod
    def of(cls, re=None, im=None, field=EXACT):
        re = Quaternion.zero(H, field) if re is None else re
        im = Quaternion.zero(H, field) if im is None else im
        return cls(re, im)


@dataclass(frozen=True)
class ComplexOctonion:
    """``re + i im`` with ``i`` the central complex unit, not the octonion e1."""

    re: Octonion
    im: Octonion

    def __post_init__(self):
        for part in (self.re, self.im):
            if not isinstance(part, Octonion):
                raise TypeError("complex octonion parts must be octonions")
            _require_division(part)

    @classmethod
    def of(cls, re=None, im=None, field=EXACT):
        re = Octonion.zero(O, field) if re is None else re
        im = Octonion.zero(O, field) if im is None else im
        return cls(re, im)

    def __add__(self, other):
        return ComplexOctonion(self.re + other.re, self.im + other.im)

    def __sub__(self, other):
        return ComplexOctonion(self.re - other.re, self.im - other.im)

    def __neg__(self):
        return ComplexOctonion(-self.re, -self.im)

    def __str__(self):
        re = str(self.re)
        if self.im.is_zero():
            return re
        im = "i*(" + str(self.im) + ")"
        return im if self.re.is_zero() else f"{re} + {im}"

    def conj(self):
        return coct_conj(self)

    def plus_sup(self):
        return ComplexOctonion(plus_sup(self.re), plus_sup(self.im))


def coct_conj(A: ComplexOctonion) -> ComplexOctonion:
    return ComplexOctonion(A.re.conj(), A.im.conj())


def coct_mul_paper(A: ComplexOctonion, X: ComplexOctonion) -> ComplexOctonion:
    """``(x + iy)(v + iw) = xv - (y w*)* + i (x* w + (y* v*)*)``.

    The expansion obtained by treating the complex ``i`` through the
    identities ``x(iy) = i(x*y)``, ``(iy)x = i(y*x*)*`` and
    ``(iy)(ix) = -(yx*)*``.
    """
    x, y, v, w = A.re, A.im, X.re, X.im
    re = x * v - star(y * star(w))
    im = star(x) * w + star(star(y) * star(v))
    return ComplexOctonion(re, im)


def coct_mul_central(A: ComplexOctonion, X: ComplexOctonion) -> ComplexOctonion:
    """C-bilinear product with ``i`` central: ``(xv - yw) + i (xw + yv)``."""
    x, y, v, w = A.re, A.im, X.re, X.im
    return ComplexOctonion(x * v - y * w, x * w + y * v)
