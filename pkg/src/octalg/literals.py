"""Element literals for the command line and JSON.

Two forms are accepted:

* a JSON coefficient array such as ``[1, "3/2", 0, -2]`` (or, for complex
  elements, ``{"re": [...], "im": [...]}``; an object with ``"coeffs"`` and
  ``"params"`` pins the algebra of a single operand);
* a sum of terms ``[sign][coef[*]][i*][unit]``, e.g. ``1 + 2e1 - 3/2*e3`` or
  ``e1 + i*e4``. Units are ``e0``..``e7``; ``i*`` marks the imaginary part of
  a complex element. For real elements ``i``, ``j`` and ``k`` may stand for
  ``e1``, ``e2`` and ``e4``. Whitespace is ignored. Coefficients are
  integers, ``p/q`` rationals or plain decimals (no exponent).
"""

from __future__ import annotations

import json
import re

from .algebra import (
    H,
    O,
    ComplexOctonion,
    ComplexQuaternion,
    Octonion,
    OctParams,
    Quaternion,
    QuatParams,
    format_terms,
)
from .scalars import EXACT, format_scalar, jsonable_scalar
from .zorn import ZornElement


class ParseError(ValueError):
    pass


_COEF = r"\d+/\d+|\d+\.\d*|\.\d+|\d+"
_REAL_TERM = re.compile(rf"^(?P<coef>{_COEF})?(?P<star>\*)?(?P<unit>e\d|[ijk])?$")
_CPLX_TERM = re.compile(rf"^(?P<coef>{_COEF})?(?P<star>\*)?(?P<i>i(?P<istar>\*)?)?(?P<unit>e\d)?$")
_ALIASES = {"i": 1, "j": 2, "k": 4}


def _scalar_token(tok: str):
    if "." in tok:
        return float(tok)
    return EXACT.coerce(tok)


def _split_terms(text: str) -> list[str]:
    s = re.sub(r"\s+", "", text)
    if not s:
        raise ParseError("empty literal")
    terms = re.findall(r"[+-]?[^+-]+", s)
    if "".join(terms) != s:
        raise ParseError(f"malformed literal {text!r}")
    return terms


def _unit_index(unit: str | None, dim: int, text: str) -> int:
    if unit is None:
        return 0
    k = _ALIASES[unit] if unit in _ALIASES else int(unit[1:])
    if k >= dim or (unit == "k" and dim != 8):
        raise ParseError(f"unit {unit!r} is not in a {dim}-dimensional algebra ({text!r})")
    return k


def parse_terms(text: str, dim: int, complex_: bool = False):
    """Coefficient lists ``(re, im)`` for a term-sum literal."""
    re_part = [0] * dim
    im_part = [0] * dim
    pattern = _CPLX_TERM if complex_ else _REAL_TERM
    for term in _split_terms(text):
        sign = -1 if term[0] == "-" else 1
        body = term.lstrip("+-")
        m = pattern.match(body)
        if not m:
            raise ParseError(f"bad term {term!r} in {text!r}")
        coef, star, unit = m.group("coef"), m.group("star"), m.group("unit")
        imag = complex_ and m.group("i") is not None
        if coef is None and unit is None and not imag:
            raise ParseError(f"bad term {term!r} in {text!r}")
        if star and coef is None:
            raise ParseError(f"dangling '*' in {term!r}")
        if star and not (unit or imag):
            raise ParseError(f"dangling '*' in {term!r}")
        if imag and m.group("istar") and unit is None:
            raise ParseError(f"dangling '*' in {term!r}")
        value = sign * (_scalar_token(coef) if coef is not None else 1)
        k = _unit_index(unit, dim, text)
        (im_part if imag else re_part)[k] += value
    return re_part, im_part


def _coeff_list(xs, dim: int):
    if not isinstance(xs, list) or len(xs) != dim:
        raise ParseError(f"expected an array of {dim} coefficients, got {xs!r}")
    out = []
    for x in xs:
        if isinstance(x, bool) or not isinstance(x, (int, float, str)):
            raise ParseError(f"bad coefficient {x!r}")
        try:
            out.append(_scalar_token(x) if isinstance(x, str) else x)
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coefficient {x!r}") from exc
    return out


def params_from_json(obj, algebra: str):
    if not isinstance(obj, dict):
        raise ParseError(f"params must be an object, got {obj!r}")
    try:
        if algebra == "quat":
            return QuatParams(obj["beta1"], obj["beta2"])
        return OctParams(obj["alpha"], obj["beta"], obj["gamma"])
    except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad params {obj!r}") from exc


def parse_params(text: str | None, algebra: str):
    """``"b1,b2"`` / ``"a,b,g"`` or the JSON object form."""
    if text is None:
        return H if algebra == "quat" else O
    text = text.strip()
    if text.startswith("{"):
        try:
            obj = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(f"bad params {text!r}") from exc
        return params_from_json(obj, algebra)
    parts = [p for p in re.sub(r"\s+", "", text).split(",")]
    want = 2 if algebra == "quat" else 3
    if len(parts) != want:
        raise ParseError(f"{algebra} takes {want} parameters, got {text!r}")
    try:
        values = [_scalar_token(p) for p in parts]
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"bad params {text!r}") from exc
    return QuatParams(*values) if algebra == "quat" else OctParams(*values)


def _load_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"bad JSON literal {text!r}") from exc


def parse_real(text: str, algebra: str, params=None, field=EXACT):
    """A quaternion (``algebra="quat"``) or octonion (``"oct"``)."""
    cls = Quaternion if algebra == "quat" else Octonion
    default = params if params is not None else (H if algebra == "quat" else O)
    text = text.strip()
    if text.startswith("[") or text.startswith("{"):
        obj = _load_json(text)
        if isinstance(obj, dict):
            if "coeffs" not in obj:
                raise ParseError(f"object literal needs 'coeffs': {text!r}")
            coeffs = _coeff_list(obj["coeffs"], cls.dim)
            elem_params = params_from_json(obj["params"], algebra) if "params" in obj else default
            return cls(coeffs, elem_params, field)
        return cls(_coeff_list(obj, cls.dim), default, field)
    re_part, _ = parse_terms(text, cls.dim)
    return cls(re_part, default, field)


def parse_complex(text: str, dim: int = 8, field=EXACT):
    """A complex octonion (``dim=8``) or complex quaternion (``dim=4``)."""
    cls = Octonion if dim == 8 else Quaternion
    params = O if dim == 8 else H
    pair = ComplexOctonion if dim == 8 else ComplexQuaternion
    text = text.strip()
    if text.startswith("{") or text.startswith("["):
        obj = _load_json(text)
        if isinstance(obj, list):
            re_part, im_part = _coeff_list(obj, dim), [0] * dim
        elif isinstance(obj, dict) and set(obj) <= {"re", "im"}:
            re_part = _coeff_list(obj.get("re", [0] * dim), dim)
            im_part = _coeff_list(obj.get("im", [0] * dim), dim)
        else:
            raise ParseError(f"complex literal must be an array or {{re, im}}: {text!r}")
    else:
        re_part, im_part = parse_terms(text, dim, complex_=True)
    return pair(cls(re_part, params, field), cls(im_part, params, field))


def parse_zorn(text: str) -> ZornElement:
    """``[a, u1, u2, u3, v1, v2, v3, b]`` or ``{"a", "b", "u", "v"}``."""
    obj = _load_json(text.strip())
    if isinstance(obj, list):
        return ZornElement.from_flat(_coeff_list(obj, 8))
    if isinstance(obj, dict) and set(obj) == {"a", "b", "u", "v"}:
        flat = _coeff_list([obj["a"], *obj["u"], *obj["v"], obj["b"]], 8)
        return ZornElement.from_flat(flat)
    raise ParseError(f"bad Zorn literal {text!r}")


def parse_element(text: str, algebra: str, params=None, field=EXACT):
    if algebra in ("quat", "oct"):
        return parse_real(text, algebra, params, field)
    if algebra == "coct":
        return parse_complex(text, 8, field)
    if algebra == "cquat":
        return parse_complex(text, 4, field)
    if algebra == "zorn":
        return parse_zorn(text)
    raise ParseError(f"unknown algebra {algebra!r}")


def _imag_terms(coeffs, units) -> list[str]:
    out = []
    for c, u in zip(coeffs, units):
        if c == 0:
            continue
        mag = format_scalar(-c if c < 0 else c)
        body = ("" if mag == "1" else mag + "*") + "i" + ("*" + u if u else "")
        out.append(("-" if c < 0 else "+") + body)
    return out


def format_element(x) -> str:
    """Human form; :func:`parse_element` reads it back unchanged."""
    if isinstance(x, (Quaternion, Octonion)):
        return format_terms(x.coeffs, x.units)
    if isinstance(x, (ComplexOctonion, ComplexQuaternion)):
        units = x.re.units
        re_s = format_terms(x.re.coeffs, units)
        im = _imag_terms(x.im.coeffs, units)
        if not im:
            return re_s
        parts = [] if re_s == "0" else [re_s]
        for t in im:
            sign, body = t[0], t[1:]
            if parts:
                parts.append(f"{'-' if sign == '-' else '+'} {body}")
            else:
                parts.append(body if sign == "+" else "-" + body)
        return " ".join(parts)
    if isinstance(x, ZornElement):
        return json.dumps(to_json(x))
    raise TypeError(f"cannot format {type(x).__name__}")


def to_json(x):
    """JSON-ready coefficient form."""
    if isinstance(x, (Quaternion, Octonion)):
        return [jsonable_scalar(c) for c in x.coeffs]
    if isinstance(x, (ComplexOctonion, ComplexQuaternion)):
        return {"re": to_json(x.re), "im": to_json(x.im)}
    if isinstance(x, ZornElement):
        return {
            "a": jsonable_scalar(x.a),
            "u": [jsonable_scalar(c) for c in x.u],
            "v": [jsonable_scalar(c) for c in x.v],
            "b": jsonable_scalar(x.b),
        }
    return jsonable_scalar(x)
