import random
from pathlib import Path

import pytest

from octalg.algebra import H, O, ComplexOctonion, ComplexQuaternion, DomainError, Octonion, Quaternion, QuatParams, star
from octalg.matrices import Matrix
from octalg.reps import (
    CONSTANTS,
    M_COLUMN,
    N_COLUMN,
    Delta,
    Gamma,
    Lambda,
    Lambda_expanded,
    Phi,
    Psi,
    Theta,
    const_matrix,
    lambda_,
    mat_apply_octcolumn,
    octcolumn_contract,
    octcolumn_scale_right,
    rho,
    unvec,
    vec,
    vec16,
)
from octalg.scalars import FLOAT

GOLDEN = Path(__file__).parent / "golden"


def qe(k):
    return Quaternion.basis(k, H)


def oe(k):
    return Octonion.basis(k, O)


def rq(rng):
    return Quaternion([rng.randint(-9, 9) for _ in range(4)], H)


def ro(rng):
    return Octonion([rng.randint(-9, 9) for _ in range(8)], O)


def read_golden(name):
    rows = (GOLDEN / f"{name}.csv").read_text().splitlines()
    return Matrix([[int(x) for x in row.split(",")] for row in rows])


def blocks(n, a, b, c, d):
    z, i = Matrix.zeros(n), Matrix.identity(n)
    pick = {0: z, 1: i, -1: -i}
    return Matrix.block([[pick[a], pick[b]], [pick[c], pick[d]]])


def test_lambda_rho_printed():
    assert lambda_(qe(1)) == read_golden("L1")
    assert rho(qe(1)) == read_golden("R1")
    assert lambda_(qe(0)) == Matrix.identity(4)
    assert rho(qe(0)) == Matrix.identity(4)


def test_quaternion_reps_are_homomorphisms():
    rng = random.Random(1)
    for _ in range(100):
        p, q = rq(rng), rq(rng)
        assert lambda_(p) @ lambda_(q) == lambda_(p * q)
        assert rho(p) @ rho(q) == rho(q * p)
        assert lambda_(p) @ vec(q) == vec(p * q)
        assert rho(p) @ vec(q) == vec(q * p)


def test_rho_is_conjugated_transpose():
    m1 = CONSTANTS["M1"]
    rng = random.Random(2)
    for _ in range(50):
        q = rq(rng)
        assert rho(q) == m1 @ lambda_(q.conj()) @ m1
        assert rho(q) == m1 @ lambda_(q).T @ m1


def test_reps_reject_split_params():
    with pytest.raises(DomainError):
        lambda_(Quaternion.basis(1, QuatParams(1, -1)))


def test_octonion_reps():
    assert Lambda(oe(0)) == Matrix.identity(8)
    assert Delta(oe(0)) == Matrix.identity(8)
    assert Lambda(oe(1)) == read_golden("theta")
    assert Delta(oe(4)) == blocks(4, 0, -1, 1, 0)
    rng = random.Random(3)
    for _ in range(200):
        a, y = ro(rng), ro(rng)
        assert Lambda(a) @ vec(y) == vec(a * y)
        assert Delta(a) @ vec(y) == vec(y * a)
        assert Lambda(a) == Lambda_expanded(a)


def test_lambda_is_not_multiplicative():
    a, b = oe(1), oe(2)
    assert Lambda(a * b) != Lambda(a) @ Lambda(b)


def test_complex_reps():
    one_q = ComplexQuaternion.of(qe(0))
    i_q = ComplexQuaternion.of(None, qe(0))
    assert Gamma(one_q) == Matrix.identity(8)
    assert Gamma(i_q) == blocks(4, 0, -1, 1, 0)
    assert Theta(i_q) == blocks(4, 0, -1, 1, 0)
    one_o = ComplexOctonion.of(oe(0))
    i_o = ComplexOctonion.of(None, oe(0))
    assert Phi(one_o) == Matrix.identity(16)
    assert Psi(one_o) == Matrix.identity(16)
    assert Phi(i_o) == blocks(8, 0, -1, 1, 0)
    assert Phi(oe(3)) == Matrix.block([[Lambda(oe(3)), Matrix.zeros(8)], [Matrix.zeros(8), Lambda(star(oe(3)))]])


def test_vectors():
    assert vec(oe(0)) == (1, 0, 0, 0, 0, 0, 0, 0)
    assert vec(oe(3)) == (0, 0, 0, 1, 0, 0, 0, 0)
    col = vec16(ComplexOctonion.of(oe(1), oe(4)))
    assert [k for k, x in enumerate(col) if x] == [1, 12]
    assert unvec(col) == ComplexOctonion.of(oe(1), oe(4))
    assert unvec(vec(oe(5))) == oe(5)


def test_constants():
    assert const_matrix("M1") == Matrix.diag([1, -1, -1, -1])
    assert const_matrix("eps") == Matrix.diag([1, 1, 1, 1, -1, -1, -1, -1])
    assert const_matrix("ε") == const_matrix("epsilon") == const_matrix("eps")
    assert const_matrix("theta") == Lambda(oe(1))
    assert const_matrix("L1") == lambda_(qe(1))
    assert const_matrix("R1") == rho(qe(1))
    assert const_matrix("S").nrows == 16
    with pytest.raises(KeyError):
        const_matrix("nope")


@pytest.mark.parametrize("name", ["L1", "R1", "M1", "eps", "tau", "sigma", "theta"])
def test_constants_match_golden(name):
    assert const_matrix(name) == read_golden(name)


def test_octonion_columns():
    assert octcolumn_contract(N_COLUMN, M_COLUMN) == Octonion.scalar(8, O)
    assert mat_apply_octcolumn(Lambda(oe(0)), M_COLUMN) == M_COLUMN
    assert mat_apply_octcolumn(const_matrix("theta"), M_COLUMN) == octcolumn_scale_right(M_COLUMN, oe(1))


def test_float_inputs_bypass_cache():
    a = Octonion([0.5] * 8, O, FLOAT)
    m = Lambda(a)
    assert m[0, 0] == 0.5 and m[0, 1] == -0.5
