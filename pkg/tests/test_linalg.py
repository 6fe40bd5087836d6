import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su21.catalog import matrix
from su21.errors import Singular
from su21.field import I, ONE, SQRT2, ZERO, fe
from su21.linalg import (
    IDENTITY,
    N,
    ZERO_MATRIX,
    CoordMatrix,
    Matrix3,
    hermitian_signature,
    mat_ops,
    nullspace,
    rank,
    rref,
    solve_in_span,
)
from su21.liealg import A_BASIS, X_ALPHA, Y_ALPHA

from conftest import approx, approx_matrix, elements, matrices


def test_products():
    A = Matrix3([[1, 2, 3], [4, 5, 6], [7, 8, "i"]])
    assert mat_ops(IDENTITY, A, "mul") == A
    assert N @ N == IDENTITY
    g0 = matrix("rot13")
    assert g0 @ g0 == Matrix3.diag(-1, 1, -1)
    with pytest.raises(ValueError):
        mat_ops(A, A, "div")


def test_det_examples():
    assert IDENTITY.det() == ONE
    assert matrix("g_reg").det() == ONE
    assert matrix("g_xa").det() == ONE


def test_inverse_examples():
    assert IDENTITY.inverse() == IDENTITY
    assert Matrix3.diag(2, "i", SQRT2).inverse() == Matrix3.diag("1/2", -I, SQRT2 / fe(2))
    g0 = matrix("rot12")
    assert g0.inverse() == g0.transpose()
    with pytest.raises(Singular):
        Matrix3.diag(1, 0, 1).inverse()


def test_dagger_examples():
    assert IDENTITY.dagger() == IDENTITY
    # a4 = i(E12 + E21) is anti-Hermitian
    assert A_BASIS[3].dagger() == -A_BASIS[3]
    assert X_ALPHA.dagger() == Y_ALPHA


def test_charpoly_examples():
    assert ZERO_MATRIX.charpoly() == (ZERO, ZERO, ZERO)
    assert A_BASIS[0].charpoly() == (ZERO, ONE, ZERO)


@given(elements(), elements(), elements())
def test_charpoly_of_diagonal(a, b, c):
    assert Matrix3.diag(a, b, c).charpoly() == (-(a + b + c), a * b + a * c + b * c, -(a * b * c))


@settings(max_examples=25)
@given(matrices(), matrices())
def test_det_multiplicative(a, b):
    assert (a @ b).det() == a.det() * b.det()


@settings(max_examples=25)
@given(matrices(), matrices())
def test_dagger_reverses_products(a, b):
    assert (a @ b).dagger() == b.dagger() @ a.dagger()


@settings(max_examples=25)
@given(matrices())
def test_against_floating_point(a):
    fa = approx_matrix(a)
    assert approx(a.det()) == pytest.approx(np.linalg.det(fa), abs=1e-6 * max(1, np.abs(fa).max() ** 3))
    p2, p1, p0 = (approx(x) for x in a.charpoly())
    assert np.allclose(np.poly(fa), [1, p2, p1, p0], atol=1e-6 * max(1, np.abs(fa).max() ** 3))
    if a.det():
        assert a @ a.inverse() == IDENTITY


def test_rref_examples():
    v = (fe(2), I, ZERO)
    red, r = rref(CoordMatrix((v,)))
    assert r == 1 and red.rows[0][0] == ONE
    real_vec = (fe(1), fe(3), SQRT2)
    assert rank([real_vec, tuple(SQRT2 * x for x in real_vec)], "real") == 1
    assert rank([real_vec, tuple(I * x for x in real_vec)], "real") == 2
    assert rank([real_vec, tuple(I * x for x in real_vec)], "complex") == 1


@given(st.lists(st.tuples(elements(), elements(), elements()), min_size=1, max_size=4), st.sampled_from(["real", "complex"]))
def test_rref_canonical(rows, domain):
    red, r = CoordMatrix(tuple(rows), domain).rref()
    again, r2 = red.rref()
    assert again == red and r2 == r
    shuffled, _ = CoordMatrix(tuple(reversed(rows)), domain).rref()
    assert shuffled == red
    # adding a combination of existing rows leaves the canonical form alone
    combo = tuple(x + fe(2) * y for x, y in zip(rows[0], rows[-1]))
    assert CoordMatrix(tuple(rows) + (combo,), domain).rref()[0] == red


@given(st.lists(st.tuples(elements(), elements(), elements()), min_size=1, max_size=3))
def test_nullspace(rows):
    ns = nullspace(rows, 3)
    assert len(ns) + rank(rows) == 3
    for v in ns:
        for r in rows:
            assert sum((a * b for a, b in zip(r, v)), ZERO) == ZERO


def test_solve_in_span():
    basis = [[ONE, ZERO, I], [ZERO, ONE, ONE]]
    assert solve_in_span(basis, [fe(2), fe(3), fe(3) + fe(2) * I]) == [fe(2), fe(3)]
    assert solve_in_span(basis, [ONE, ONE, ZERO]) is None


def test_hermitian_signature_examples():
    assert hermitian_signature(N.rows()) == (2, 1, 0)
    assert hermitian_signature([[0, 1], [1, 0]]) == (1, 1, 0)
    assert hermitian_signature([[0, I], [-I, 0]]) == (1, 1, 0)
    assert hermitian_signature([[0, 0], [0, 0]]) == (0, 0, 2)
    with pytest.raises(ValueError):
        hermitian_signature([[0, I], [I, 0]])


@settings(max_examples=25)
@given(matrices())
def test_hermitian_signature_against_eigenvalues(a):
    h = a + a.dagger()
    p, n, z = hermitian_signature(h.rows())
    eig = np.linalg.eigvalsh(approx_matrix(h))
    tol = 1e-7
    if all(abs(e) > tol for e in eig) or z:
        assert p == sum(e > tol for e in eig)
        assert n == sum(e < -tol for e in eig)


def test_json_round_trip():
    g = matrix("g_xa")
    assert Matrix3.from_json(g.to_json()) == g
