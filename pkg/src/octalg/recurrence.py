"""Third-order integer recurrences and the invertible elements built from them.

For ``X_n = a X_{n-1} + b X_{n-2} + c X_{n-3}`` the quaternions
``W_n = X_n + X_{n+1} e1 + X_{n+2} e2 + X_{n+3} e3`` and the octonions
``Z_n = sum_{m<8} X_{n+m} e_m`` have norms that are exact integers when the
algebra parameters are integers, so nonvanishing of the norm (hence
invertibility) can be certified index by index.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .algebra import Octonion, OctParams, Quaternion, QuatParams

EPS_ROOT = 1e-10
EPS_SEP = 1e-8
EPS_SOLVE = 1e-9
NEWTON_STEPS = 4


class RootConditionError(ValueError):
    pass


class NotThreeDistinctRealRoots(RootConditionError):
    pass


class DominantRootNotGreaterThanOne(RootConditionError):
    pass


@dataclass(frozen=True)
class RecurrenceSpec:
    a: int
    b: int
    c: int
    x0: int
    x1: int
    x2: int

    def __post_init__(self):
        for name in ("a", "b", "c", "x0", "x1", "x2"):
            v = getattr(self, name)
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"{name} must be an integer, got {v!r}")

    @property
    def coefficients(self) -> tuple[int, int, int]:
        return (self.a, self.b, self.c)

    @property
    def seeds(self) -> tuple[int, int, int]:
        return (self.x0, self.x1, self.x2)

    def as_dict(self) -> dict:
        return {k: getattr(self, k) for k in ("a", "b", "c", "x0", "x1", "x2")}


TRIBONACCI = RecurrenceSpec(1, 1, 1, 0, 1, 1)


def recurrence_seq(spec: RecurrenceSpec, n_max: int) -> list[int]:
    """``[X_0, ..., X_{n_max}]`` in exact integers."""
    if n_max < 0:
        raise ValueError("n_max must be non-negative")
    xs = list(spec.seeds)
    a, b, c = spec.coefficients
    while len(xs) <= n_max:
        xs.append(a * xs[-1] + b * xs[-2] + c * xs[-3])
    return xs[: n_max + 1]


def char_poly(spec: RecurrenceSpec):
    """Characteristic polynomial ``x^3 - a x^2 - b x - c`` as a callable."""
    a, b, c = spec.coefficients
    return lambda x: ((x - a) * x - b) * x - c


def discriminant(spec: RecurrenceSpec) -> int:
    # monic x^3 + B x^2 + C x + D
    B, C, D = -spec.a, -spec.b, -spec.c
    return 18 * B * C * D - 4 * B ** 3 * D + B * B * C * C - 4 * C ** 3 - 27 * D * D


@dataclass(frozen=True)
class CubicRoots:
    """Roots of the characteristic cubic.

    Either three distinct reals with ``sigma1 > sigma2 > sigma3``, or a real
    ``sigma1`` together with a complex-conjugate pair ``sigma2, sigma3``
    (``sigma2`` with positive imaginary part) of strictly smaller modulus.
    """

    sigma1: float
    sigma2: float | complex
    sigma3: float | complex
    residuals: tuple = field(default=(), compare=False)

    def __iter__(self):
        return iter((self.sigma1, self.sigma2, self.sigma3))

    @property
    def real(self) -> bool:
        return not isinstance(self.sigma2, complex)


def _polish(x: float, a: int, b: int, c: int) -> float:
    # Newton steps evaluated in exact rationals, rounded back to a double.
    for _ in range(NEWTON_STEPS):
        q = Fraction(x)
        p = ((q - a) * q - b) * q - c
        dp = (3 * q - 2 * a) * q - b
        if p == 0 or dp == 0:
            break
        nxt = float(q - p / dp)
        if nxt == x:
            break
        x = nxt
    return x


def _depressed(a: int, b: int, c: int):
    # x = t + a/3 turns x^3 - a x^2 - b x - c into t^3 + p t + q
    p = Fraction(-b) - Fraction(a * a, 3)
    q = Fraction(-2 * a ** 3, 27) - Fraction(a * b, 3) - c
    return p, q


def _three_real(a: int, b: int, c: int) -> list[float]:
    p, q = _depressed(a, b, c)
    m = 2 * math.sqrt(float(-p / 3))
    arg = float(3 * q / (2 * p)) * math.sqrt(float(-3 / p))
    phi = math.acos(max(-1.0, min(1.0, arg))) / 3
    raw = [m * math.cos(phi - 2 * math.pi * k / 3) + a / 3 for k in range(3)]
    return sorted((_polish(r, a, b, c) for r in raw), reverse=True)


def _cbrt(x: float) -> float:
    return math.copysign(abs(x) ** (1 / 3), x)


def _one_real(a: int, b: int, c: int) -> tuple[float, complex, complex]:
    p, q = _depressed(a, b, c)
    root = math.sqrt(float(q * q / 4 + p ** 3 / 27))
    u = _cbrt(float(-q / 2) + root)
    v = _cbrt(float(-q / 2) - root)
    s1 = _polish(u + v + a / 3, a, b, c)
    # deflate: x^2 + (s1 - a) x + (s1^2 - a s1 - b)
    lin = s1 - a
    const = s1 * s1 - a * s1 - b
    re = -lin / 2
    im = math.sqrt(max(0.0, const - lin * lin / 4))
    return s1, complex(re, im), complex(re, -im)


def cubic_roots(spec: RecurrenceSpec, require_real: bool = False) -> CubicRoots:
    """Roots of ``x^3 - a x^2 - b x - c``, dominant real root first.

    Three distinct real roots are returned in decreasing order. A single real
    root with a complex-conjugate pair is accepted only when the real root
    strictly dominates the pair in modulus (the growth argument needs nothing
    more); ``require_real=True`` rejects that case too.

    Raises :class:`NotThreeDistinctRealRoots` for repeated roots, roots closer
    than ``EPS_SEP``, residuals above ``EPS_ROOT``, or a non-dominant complex
    pair, and :class:`DominantRootNotGreaterThanOne` when ``sigma1 <= 1``.
    """
    a, b, c = spec.coefficients
    label = f"x^3 - ({a})x^2 - ({b})x - ({c})"
    disc = discriminant(spec)
    if disc == 0 or (disc < 0 and require_real):
        raise NotThreeDistinctRealRoots(f"discriminant {disc} for {label}")
    poly = char_poly(spec)
    if disc > 0:
        roots = _three_real(a, b, c)
        residuals = tuple(float(abs(poly(Fraction(r)))) for r in roots)
        if min(roots[0] - roots[1], roots[1] - roots[2]) < EPS_SEP:
            raise NotThreeDistinctRealRoots(f"roots {roots} closer than {EPS_SEP}")
    else:
        roots = list(_one_real(a, b, c))
        residuals = (float(abs(poly(Fraction(roots[0])))),
                     abs(poly(roots[1])), abs(poly(roots[2])))
        if roots[0] <= abs(roots[1]) + EPS_SEP:
            raise NotThreeDistinctRealRoots(
                f"{label} has one real root {roots[0]} not dominating the complex pair"
            )
    if max(residuals) > EPS_ROOT:
        raise NotThreeDistinctRealRoots(f"root residuals {residuals} exceed {EPS_ROOT}")
    if roots[0] <= 1 + EPS_SEP:
        raise DominantRootNotGreaterThanOne(f"dominant root {roots[0]} is not > 1")
    return CubicRoots(*roots, residuals=residuals)


@dataclass(frozen=True)
class BinetCoeffs:
    """``A`` is real; ``B`` and ``C`` are complex conjugates when the roots are."""

    A: float
    B: float | complex
    C: float | complex

    def __iter__(self):
        return iter((self.A, self.B, self.C))


def binet_coeffs(spec: RecurrenceSpec, roots: CubicRoots) -> BinetCoeffs:
    """Solve ``sum_k coeff_k sigma_k^j = x_j`` for ``j = 0, 1, 2``.

    The system is Vandermonde; the solution is written in Lagrange form.
    """
    s1, s2, s3 = roots
    x0, x1, x2 = spec.seeds

    def lagrange(si, sj, sk):
        return (x2 - (sj + sk) * x1 + sj * sk * x0) / ((si - sj) * (si - sk))

    A = lagrange(s1, s2, s3)
    coeffs = BinetCoeffs(A.real if isinstance(A, complex) else A,
                         lagrange(s2, s1, s3), lagrange(s3, s1, s2))
    A, B, C = coeffs
    for j, xj in enumerate(spec.seeds):
        lhs = A * s1 ** j + B * s2 ** j + C * s3 ** j
        if abs(lhs - xj) > EPS_SOLVE * max(1.0, abs(xj)):
            raise ArithmeticError(f"Vandermonde residual {abs(lhs - xj)} too large in row {j}")
    return coeffs


def binet_eval(coeffs: BinetCoeffs, roots: CubicRoots, n: int) -> float:
    if n < 0:
        raise ValueError("n must be non-negative")
    A, B, C = coeffs
    s1, s2, s3 = roots
    value = A * s1 ** n + B * s2 ** n + C * s3 ** n
    return value.real if isinstance(value, complex) else value


def build_Wn(spec: RecurrenceSpec, params: QuatParams, n: int) -> Quaternion:
    xs = recurrence_seq(spec, n + 3)
    return Quaternion(xs[n:n + 4], params)


def build_Zn(spec: RecurrenceSpec, params: OctParams, n: int) -> Octonion:
    xs = recurrence_seq(spec, n + 7)
    return Octonion(xs[n:n + 8], params)


def norm_weights(params) -> tuple:
    """Weights of the squared terms in the norm expansion."""
    if isinstance(params, QuatParams):
        b1, b2 = params.beta1, params.beta2
        return (1, b1, b2, b1 * b2)
    al, be, ga = params.alpha, params.beta, params.gamma
    return (1, al, be, al * be, ga, al * ga, be * ga, al * be * ga)


def expansion_norm(terms, params):
    """``X_n^2 + w_1 X_{n+1}^2 + ...`` evaluated straight from the terms."""
    return sum(w * x * x for w, x in zip(norm_weights(params), terms))


def f_criterion(A: float, params: QuatParams, sigma1: float) -> float:
    b1, b2 = float(params.beta1), float(params.beta2)
    s2 = sigma1 * sigma1
    return A * A * (1 + b1 * s2 + b2 * s2 ** 2 + b1 * b2 * s2 ** 3)


def g_criterion(A: float, params: OctParams, sigma1: float) -> float:
    al, be, ga = float(params.alpha), float(params.beta), float(params.gamma)
    s2 = sigma1 * sigma1
    weights = (1, al, be, al * be, ga, al * ga, be * ga, al * be * ga)
    return A * A * sum(w * s2 ** k for k, w in enumerate(weights))


def _sign(x) -> int:
    return (x > 0) - (x < 0)


@dataclass
class InvertibleReport:
    spec: RecurrenceSpec
    params: object
    bound: int
    norms: list[int]
    zero_norm_indices: list[int]
    n0: int | None
    criterion_name: str
    criterion_value: float | None
    criterion_status: str
    roots: CubicRoots | None = None
    binet: BinetCoeffs | None = None

    @property
    def algebra(self) -> str:
        return "quat" if isinstance(self.params, QuatParams) else "oct"

    @property
    def criterion_sign(self) -> int | None:
        return None if self.criterion_value is None else _sign(self.criterion_value)

    def to_json(self) -> dict:
        return {
            "spec": self.spec.as_dict(),
            "algebra": self.algebra,
            "params": {k: _json_param(v) for k, v in self.params.as_dict().items()},
            "bound": self.bound,
            "zero_norm_indices": self.zero_norm_indices,
            "n0": "none within bound" if self.n0 is None else self.n0,
            "criterion": {
                "name": self.criterion_name,
                "value": self.criterion_value,
                "sign": self.criterion_sign,
                "status": self.criterion_status,
            },
            "roots": None if self.roots is None else [_json_num(r) for r in self.roots],
            "binet": None if self.binet is None else [_json_num(r) for r in self.binet],
            "norms": [str(v) for v in self.norms],
        }


def _json_num(x):
    if isinstance(x, complex):
        return {"re": x.real, "im": x.imag}
    return x


def _json_param(v):
    if isinstance(v, Fraction):
        return str(v)
    return v


def element_norms(spec: RecurrenceSpec, params, bound: int) -> list[int]:
    """Exact norms of ``W_n`` (or ``Z_n``) for ``n = 0 .. bound``."""
    width = 4 if isinstance(params, QuatParams) else 8
    xs = recurrence_seq(spec, bound + width - 1)
    ctor = Quaternion if width == 4 else Octonion
    return [ctor(xs[n:n + width], params).norm() for n in range(bound + 1)]


def find_invertible_threshold(spec: RecurrenceSpec, params, bound: int) -> InvertibleReport:
    """Scan ``n = 0 .. bound`` exactly and report where the norm vanishes.

    ``n0`` is the smallest index with every norm on ``[n0, bound]`` nonzero,
    or ``None`` when the norm at ``bound`` itself is zero. The f/g value is
    advisory and never affects ``n0``.
    """
    if bound < 0:
        raise ValueError("bound must be non-negative")
    for v in params.values():
        if not isinstance(v, int):
            raise ValueError("exact certification needs integer algebra parameters")
    norms = element_norms(spec, params, bound)
    zeros = [n for n, v in enumerate(norms) if v == 0]
    if norms[bound] == 0:
        n0 = None
    else:
        n0 = zeros[-1] + 1 if zeros else 0

    quat = isinstance(params, QuatParams)
    name = "f" if quat else "g"
    roots = coeffs = value = None
    try:
        roots = cubic_roots(spec)
        coeffs = binet_coeffs(spec, roots)
    except (RootConditionError, ArithmeticError) as exc:
        status = f"unavailable: {exc}"
    else:
        crit = f_criterion if quat else g_criterion
        value = crit(coeffs.A, params, roots.sigma1)
        status = "inconclusive" if value == 0 else "ok"
    return InvertibleReport(spec, params, bound, norms, zeros, n0, name, value, status, roots, coeffs)


def criterion_agrees(report: InvertibleReport, window: int = 10) -> bool | None:
    """Whether the sign of the last scanned norm matches the f/g sign.

    ``None`` when the check does not apply: no usable criterion, or
    ``|norm|`` is not strictly increasing over the last ``window`` indices.
    """
    sign = report.criterion_sign
    if not sign or len(report.norms) < window:
        return None
    tail = [abs(v) for v in report.norms[-window:]]
    if any(x >= y for x, y in zip(tail, tail[1:])):
        return None
    return _sign(report.norms[-1]) == sign
