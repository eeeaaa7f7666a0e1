"""Zorn's vector-matrix algebra: pairs of scalars and pairs of 3-vectors
arranged as ``[[a, u], [v, b]]``."""

from __future__ import annotations

from dataclasses import dataclass

from .scalars import EXACT


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]


def cross(u, v):
    return (
        u[1] * v[2] - u[2] * v[1],
        u[2] * v[0] - u[0] * v[2],
        u[0] * v[1] - u[1] * v[0],
    )


def _vadd(*vs):
    return tuple(sum(c) for c in zip(*vs))


def _vscale(k, v):
    return tuple(k * c for c in v)


@dataclass(frozen=True)
class ZornElement:
    a: object
    b: object
    u: tuple
    v: tuple

    def __post_init__(self):
        c = EXACT.coerce
        object.__setattr__(self, "a", c(self.a))
        object.__setattr__(self, "b", c(self.b))
        object.__setattr__(self, "u", tuple(c(x) for x in self.u))
        object.__setattr__(self, "v", tuple(c(x) for x in self.v))
        if len(self.u) != 3 or len(self.v) != 3:
            raise ValueError("Zorn vectors have three components")

    @classmethod
    def identity(cls):
        return cls(1, 1, (0, 0, 0), (0, 0, 0))

    @classmethod
    def from_flat(cls, xs):
        """``[a, u1, u2, u3, v1, v2, v3, b]``."""
        xs = list(xs)
        if len(xs) != 8:
            raise ValueError("a Zorn element has 8 coordinates")
        return cls(xs[0], xs[7], tuple(xs[1:4]), tuple(xs[4:7]))

    def flat(self) -> tuple:
        return (self.a, *self.u, *self.v, self.b)

    @classmethod
    def basis(cls, k: int):
        xs = [0] * 8
        xs[k] = 1
        return cls.from_flat(xs)

    def __add__(self, other):
        return ZornElement(self.a + other.a, self.b + other.b,
                           _vadd(self.u, other.u), _vadd(self.v, other.v))

    def __sub__(self, other):
        return self + other * -1

    def __mul__(self, other):
        if not isinstance(other, ZornElement):
            return ZornElement(self.a * other, self.b * other,
                               _vscale(other, self.u), _vscale(other, self.v))
        return zorn_mul(self, other)


def zorn_mul(p: ZornElement, q: ZornElement) -> ZornElement:
    a, b, u, v = p.a, p.b, p.u, p.v
    c, d, z, w = q.a, q.b, q.u, q.v
    return ZornElement(
        a * c + dot(u, w),
        b * d + dot(v, z),
        _vadd(_vscale(a, z), _vscale(d, u), _vscale(-1, cross(v, w))),
        _vadd(_vscale(c, v), _vscale(b, w), cross(u, z)),
    )
