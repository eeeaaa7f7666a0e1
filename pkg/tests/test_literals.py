import random
from fractions import Fraction

import pytest

from octalg.algebra import H, O, ComplexOctonion, Octonion, OctParams, Quaternion, QuatParams
from octalg.literals import ParseError, format_element, parse_element, parse_params, to_json
from octalg.zorn import ZornElement


def oe(k):
    return Octonion.basis(k, O)


def test_term_literals():
    assert parse_element("1 + 2e1 - 3/2*e3", "quat") == Quaternion([1, 2, 0, Fraction(-3, 2)], H)
    assert parse_element("e1", "oct") == oe(1)
    assert parse_element("k", "oct") == oe(4)
    assert parse_element("i", "quat") == Quaternion.basis(1, H)
    assert parse_element("-e7 + e7", "oct") == Octonion.zero(O)
    assert parse_element("  4 ", "oct") == Octonion.scalar(4, O)


def test_json_literals():
    assert parse_element('[1, "1/2", 0, -2]', "quat") == Quaternion([1, Fraction(1, 2), 0, -2], H)
    x = parse_element('{"coeffs": [0, 1, 0, 0], "params": {"beta1": 1, "beta2": -1}}', "quat")
    assert x.params == QuatParams(1, -1)


def test_complex_literals():
    A = parse_element("e2 + i*e4", "coct")
    assert A == ComplexOctonion.of(oe(2), oe(4))
    assert parse_element("-i", "coct") == ComplexOctonion.of(None, -oe(0))
    assert parse_element("3/4*i*e1", "coct").im == oe(1) * Fraction(3, 4)
    assert parse_element('{"im": [1, 0, 0, 0, 0, 0, 0, 0]}', "coct") == ComplexOctonion.of(None, oe(0))


def test_zorn_literals():
    z = parse_element("[1, 2, 3, 4, 5, 6, 7, 8]", "zorn")
    assert z == ZornElement(1, 8, (2, 3, 4), (5, 6, 7))
    assert parse_element('{"a": 1, "b": 8, "u": [2, 3, 4], "v": [5, 6, 7]}', "zorn") == z


@pytest.mark.parametrize("text", ["", "+-e1", "e9", "2*", "x", "1..2", "e1e2", "[1, 2]", "[true,0,0,0]"])
def test_rejections(text):
    with pytest.raises(ParseError):
        parse_element(text, "quat" if text.startswith("[") else "oct")


def test_params():
    assert parse_params(None, "quat") == H
    assert parse_params("1,-1", "quat") == QuatParams(1, -1)
    assert parse_params('{"alpha": 1, "beta": 1, "gamma": -1}', "oct") == OctParams(1, 1, -1)
    with pytest.raises(ParseError):
        parse_params("1,2,3", "quat")


def test_format_examples():
    assert format_element(parse_element("2*i*e2 - 3/4*i - e7", "coct")) == "-e7 - 3/4*i + 2*i*e2"
    assert format_element(Quaternion([0, 0, 0, 0], H)) == "0"
    assert to_json(Quaternion([Fraction(1, 2), 0, 0, 3], H)) == ["1/2", 0, 0, 3]


def rand_scalar(rng):
    kind = rng.randrange(3)
    if kind == 0:
        return 0
    if kind == 1:
        return rng.randint(-50, 50)
    return Fraction(rng.randint(-50, 50), rng.randint(1, 12))


def random_element(rng):
    kind = rng.choice(["quat", "oct", "coct"])
    if kind == "quat":
        return kind, Quaternion([rand_scalar(rng) for _ in range(4)], H)
    if kind == "oct":
        return kind, Octonion([rand_scalar(rng) for _ in range(8)], O)
    re = Octonion([rand_scalar(rng) for _ in range(8)], O)
    im = Octonion([rand_scalar(rng) for _ in range(8)], O)
    return kind, ComplexOctonion(re, im)


def test_round_trip_500():
    rng = random.Random(500)
    for _ in range(500):
        kind, x = random_element(rng)
        text = format_element(x)
        assert parse_element(text, kind) == x, text
