"""Exact verification of the matrix-representation identities.

Every identity is a named checker over a fixed number of inputs drawn from
H = H(1,1) or O = O(1,1,1). A checker returns ``{check name: (lhs, rhs)}``
and the harness compares the two sides with exact equality, either over
every tuple of basis elements or over seeded random integer elements.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from typing import Callable

from .algebra import (
    H,
    O,
    ComplexOctonion,
    Octonion,
    Quaternion,
    coct_mul_central,
    coct_mul_paper,
    plus_sub,
    plus_sup,
    star,
    tilde,
)
from .matrices import Matrix
from .reps import (
    M_COLUMN,
    N_COLUMN,
    Delta,
    Lambda,
    OctColumn,
    Phi,
    Psi,
    const_matrix,
    lambda_,
    mat_apply_octcolumn,
    octcolumn_contract,
    octcolumn_scale_left,
    octcolumn_scale_right,
    rho,
    vec,
    vec16,
)
from .scalars import jsonable_scalar

COEFF_RANGE = (-9, 9)
DEFAULT_SAMPLES = 500
MAX_COUNTEREXAMPLES = 20


class UnknownPropositionError(KeyError):
    pass


@dataclass(frozen=True)
class Proposition:
    id: str
    title: str
    inputs: str  # one letter per input: "q" for H, "o" for O
    check: Callable
    asserted: bool = True
    probes: tuple = ()


CATALOG: dict[str, Proposition] = {}


def proposition(id, title, inputs, asserted=True, probes=()):
    def register(fn):
        CATALOG[id] = Proposition(id, title, inputs, fn, asserted, probes)
        return fn
    return register


def _e(k):
    return Octonion.basis(k, O)


E1 = _e(1)
ZERO_O = Octonion.zero(O)


# Sign-matrix identities. The second one uses the a_+ sign pattern.

@proposition("R2.2a", "eps vec(x) = vec(tilde(x))", "o")
def _r22a(x):
    return {"": (const_matrix("eps").apply(vec(x)), vec(tilde(x)))}


@proposition("R2.2b", "tau vec(x) = vec(x_+)", "o")
def _r22b(x):
    return {"": (const_matrix("tau").apply(vec(x)), vec(plus_sub(x)))}


@proposition("2.3", "sigma lambda(q) sigma = lambda(q*), sigma rho(q) sigma = rho(q*)", "q")
def _p23(q):
    s = const_matrix("sigma")
    return {
        "lambda": (s @ lambda_(q) @ s, lambda_(star(q))),
        "rho": (s @ rho(q) @ s, rho(star(q))),
    }


@proposition("2.4.1", "e1 y = y* e1", "o")
def _p241(y):
    return {"": (E1 * y, star(y) * E1)}


@proposition("2.4.2", "(e1 y) x = e1 (y* x*)*", "oo")
def _p242(x, y):
    return {"": ((E1 * y) * x, E1 * star(star(y) * star(x)))}


@proposition("2.4.3", "x (e1 y) = e1 (x* y)", "oo")
def _p243(x, y):
    return {"": (x * (E1 * y), E1 * (star(x) * y))}


@proposition("2.4.4", "(e1 y)(e1 x) = -(y x*)*", "oo")
def _p244(x, y):
    return {"": ((E1 * y) * (E1 * x), -star(y * star(x)))}


@proposition("2.5a", "eps Lambda(a) eps = Lambda(tilde(a))", "o")
def _p25a(a):
    e = const_matrix("eps")
    return {"": (e @ Lambda(a) @ e, Lambda(tilde(a)))}


@proposition("2.5b", "eps Delta(a) eps = Delta(tilde(a))", "o")
def _p25b(a):
    e = const_matrix("eps")
    return {"": (e @ Delta(a) @ e, Delta(tilde(a)))}


@proposition("2.5c", "tau Lambda(a) tau = Lambda(a_+)", "o")
def _p25c(a):
    t = const_matrix("tau")
    m1, s = const_matrix("M1"), const_matrix("sigma")
    return {
        "": (t @ Lambda(a) @ t, Lambda(plus_sub(a))),
        "M1_sigma_commute": (m1 @ s, s @ m1),
    }


@proposition("2.5d", "tau Delta(a) tau = Delta(a_+)", "o")
def _p25d(a):
    t = const_matrix("tau")
    return {"": (t @ Delta(a) @ t, Delta(plus_sub(a)))}


PROBE = (ZERO_O, _e(2), _e(2), ZERO_O)


@proposition("2.6", "vec(AX) = Phi(A) vec(X)", "oooo", asserted=False, probes=(PROBE,))
def _p26(x, y, v, w):
    A, X = ComplexOctonion(x, y), ComplexOctonion(v, w)
    rhs = Phi(A).apply(vec16(X))
    return {
        "paper": (vec16(coct_mul_paper(A, X)), rhs),
        "central": (vec16(coct_mul_central(A, X)), rhs),
    }


@proposition("2.7i", "Lambda(a) M = M a", "o")
def _p27i(a):
    return {"": (mat_apply_octcolumn(Lambda(a), M_COLUMN), octcolumn_scale_right(M_COLUMN, a))}


@proposition("2.7ii", "theta M = M e1", "")
def _p27ii():
    theta = const_matrix("theta")
    return {
        "": (mat_apply_octcolumn(theta, M_COLUMN), octcolumn_scale_right(M_COLUMN, E1)),
        "theta_is_Lambda_e1": (theta, Lambda(E1)),
    }


@proposition("2.7iii", "Lambda(a) N = conj(a) N", "o")
def _p27iii(a):
    return {"": (mat_apply_octcolumn(Lambda(a), N_COLUMN), octcolumn_scale_left(a.conj(), N_COLUMN))}


@proposition("2.7NM", "N^t M = 8", "")
def _p27nm():
    return {"": (octcolumn_contract(N_COLUMN, M_COLUMN), Octonion.scalar(8, O))}


@proposition("2.8i", "T Lambda(a) T = Delta(a^+)", "o")
def _p28i(a):
    t = const_matrix("T")
    return {"": (t @ Lambda(a) @ t, Delta(plus_sup(a)))}


@proposition("2.8ii", "S Phi(A) S = Psi(A^+)", "oo")
def _p28ii(x, y):
    s = const_matrix("S")
    A = ComplexOctonion(x, y)
    return {"": (s @ Phi(A) @ s, Psi(A.plus_sup()))}


@proposition("2.9", "Psi(A^+) vec(X) = S vec(A X^+)", "oooo", asserted=False, probes=(PROBE,))
def _p29(x, y, v, w):
    A, X = ComplexOctonion(x, y), ComplexOctonion(v, w)
    s = const_matrix("S")
    lhs = Psi(A.plus_sup()).apply(vec16(X))
    Xp = X.plus_sup()
    return {
        "paper": (lhs, s.apply(vec16(coct_mul_paper(A, Xp)))),
        "central": (lhs, s.apply(vec16(coct_mul_central(A, Xp)))),
    }


@proposition("E2.20", "vec(xy) = Lambda(x) vec(y)", "oo")
def _e220(x, y):
    return {"": (vec(x * y), Lambda(x).apply(vec(y)))}


@proposition("E2.21", "vec(yx) = Delta(x) vec(y)", "oo")
def _e221(x, y):
    return {"": (vec(y * x), Delta(x).apply(vec(y)))}


@proposition("E2.22", "vec(ax) = Lambda(a) vec(x), vec(xa) = Delta(a) vec(x)", "oo")
def _e222(a, x):
    return {
        "left": (vec(a * x), Lambda(a).apply(vec(x))),
        "right": (vec(x * a), Delta(a).apply(vec(x))),
    }


@proposition("E2.23", "Lambda(a^2) = Lambda(a)^2, Delta(a^2) = Delta(a)^2", "o")
def _e223(a):
    L, D = Lambda(a), Delta(a)
    return {
        "Lambda": (Lambda(a * a), L @ L),
        "Delta": (Delta(a * a), D @ D),
    }


@proposition("E2.24", "Lambda(a) Delta(a) = Delta(a) Lambda(a)", "o")
def _e224(a):
    L, D = Lambda(a), Delta(a)
    return {"": (L @ D, D @ L)}


@proposition("M2.1", "(xzx)y = x(z(xy))", "ooo")
def _m21(x, y, z):
    return {"": (((x * z) * x) * y, x * (z * (x * y)))}


@proposition("M2.2", "y(xzx) = ((yx)z)x", "ooo")
def _m22(x, y, z):
    return {"": (y * ((x * z) * x), ((y * x) * z) * x)}


@proposition("M2.3", "(xy)(zx) = x(yz)x", "ooo")
def _m23(x, y, z):
    return {"": ((x * y) * (z * x), (x * (y * z)) * x)}


def ids() -> list[str]:
    return list(CATALOG)


def get(id: str) -> Proposition:
    try:
        return CATALOG[id]
    except KeyError:
        raise UnknownPropositionError(id) from None


# Serialization of values appearing on either side of a check.

def to_jsonable(value):
    if isinstance(value, Matrix):
        return [[jsonable_scalar(x) for x in row] for row in value.rows]
    if isinstance(value, (Octonion, Quaternion)):
        return [jsonable_scalar(x) for x in value.coeffs]
    if isinstance(value, ComplexOctonion):
        return {"re": to_jsonable(value.re), "im": to_jsonable(value.im)}
    if isinstance(value, OctColumn):
        return [to_jsonable(e) for e in value]
    if isinstance(value, (tuple, list)):
        return [to_jsonable(x) for x in value]
    return jsonable_scalar(value)


def _element(kind: str, coeffs):
    return Quaternion(coeffs, H) if kind == "q" else Octonion(coeffs, O)


def _basis(kind: str):
    dim = 4 if kind == "q" else 8
    return [_element(kind, [1 if i == k else 0 for i in range(dim)]) for k in range(dim)]


def random_element(kind: str, rng: random.Random):
    lo, hi = COEFF_RANGE
    dim = 4 if kind == "q" else 8
    return _element(kind, [rng.randint(lo, hi) for _ in range(dim)])


def input_tuples(prop: Proposition, mode: str, count: int = DEFAULT_SAMPLES, seed: int = 0):
    """Inputs in evaluation order: probes first, then basis tuples or samples."""
    yield from prop.probes
    if not prop.inputs:
        yield ()
        return
    if mode == "exhaustive":
        yield from itertools.product(*(_basis(k) for k in prop.inputs))
    elif mode == "random":
        rng = random.Random(seed)
        for _ in range(count):
            yield tuple(random_element(k, rng) for k in prop.inputs)
    else:
        raise ValueError(f"unknown mode {mode!r}")


@dataclass
class CheckResult:
    name: str
    cases: int = 0
    failures: int = 0
    counterexamples: list = field(default_factory=list)

    @property
    def verdict(self) -> str:
        return "fails" if self.failures else "holds"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "verdict": self.verdict,
            "cases": self.cases,
            "failures": self.failures,
            "counterexamples": self.counterexamples,
        }


@dataclass
class PropositionReport:
    id: str
    title: str
    mode: str
    seed: int | None
    count: int | None
    asserted: bool
    checks: list[CheckResult]

    @property
    def verdict(self) -> str:
        return "fails" if any(c.failures for c in self.checks) else "holds"

    @property
    def counterexamples(self) -> list:
        return [cx for c in self.checks for cx in c.counterexamples]

    @property
    def ok(self) -> bool:
        """False only when an asserted identity failed."""
        return not self.asserted or self.verdict == "holds"

    def to_json(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "mode": self.mode,
            "seed": self.seed,
            "count": self.count,
            "asserted": self.asserted,
            "verdict": self.verdict,
            "counterexamples": self.counterexamples,
            "checks": [c.to_json() for c in self.checks],
        }


def verify_proposition(id: str, mode: str = "exhaustive", count: int = DEFAULT_SAMPLES,
                       seed: int = 0, max_counterexamples: int = MAX_COUNTEREXAMPLES
                       ) -> PropositionReport:
    prop = get(id)
    checks: dict[str, CheckResult] = {}
    for inputs in input_tuples(prop, mode, count, seed):
        for name, (lhs, rhs) in prop.check(*inputs).items():
            res = checks.setdefault(name, CheckResult(name))
            res.cases += 1
            if lhs != rhs:
                res.failures += 1
                if len(res.counterexamples) < max_counterexamples:
                    res.counterexamples.append({
                        "check": name,
                        "inputs": [to_jsonable(x) for x in inputs],
                        "lhs": to_jsonable(lhs),
                        "rhs": to_jsonable(rhs),
                    })
    random_mode = mode == "random"
    return PropositionReport(
        id=prop.id,
        title=prop.title,
        mode=mode,
        seed=seed if random_mode else None,
        count=count if random_mode else None,
        asserted=prop.asserted,
        checks=list(checks.values()),
    )


def replay(id: str, inputs: list) -> dict:
    """Re-evaluate a checker on serialized inputs (coefficient lists).

    Returns ``{check: {"lhs", "rhs", "equal"}}`` with JSON-ready sides.
    """
    prop = get(id)
    if len(inputs) != len(prop.inputs):
        raise ValueError(f"{id} takes {len(prop.inputs)} inputs")
    elems = [_element(k, c) for k, c in zip(prop.inputs, inputs)]
    out = {}
    for name, (lhs, rhs) in prop.check(*elems).items():
        out[name] = {"lhs": to_jsonable(lhs), "rhs": to_jsonable(rhs), "equal": lhs == rhs}
    return out


def lambda_witness():
    """First basis pair ``(e_i, e_j)`` with ``Lambda(e_i e_j) != Lambda(e_i) Lambda(e_j)``."""
    for i, j in itertools.product(range(8), repeat=2):
        a, b = _e(i), _e(j)
        if Lambda(a * b) != Lambda(a) @ Lambda(b):
            return a, b
    return None
