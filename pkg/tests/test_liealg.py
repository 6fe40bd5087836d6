import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su21.catalog import MATRICES, matrix
from su21.errors import DomainMismatch, Singular
from su21.field import I, ONE, SQRT2, ZERO, fe
from su21.linalg import IDENTITY, Matrix3, rank
from su21.liealg import (
    A_BASIS,
    CHEVALLEY,
    H_ALPHA,
    H_BETA,
    X_ALPHA,
    X_ALPHA_BETA,
    X_BETA,
    Y_ALPHA,
    Y_ALPHA_BETA,
    a_coords,
    bracket,
    chevalley_coords,
    conjugate_subalgebra,
    from_a_coords,
    from_chevalley_coords,
    in_su21_algebra,
    in_su21_group,
    is_closed,
    is_real_span,
    real_form,
    span_equal,
    span_of,
    tau_alg,
    tau_grp,
)

from conftest import elements, real_elements

a = dict(enumerate(A_BASIS, start=1))
E = Matrix3.unit
INVERTIBLE_WITNESSES = [m for m in MATRICES.values() if m.det()]


def test_a_basis_entries():
    assert a[1] == Matrix3.diag(I, -I, 0)
    assert a[2] == Matrix3.diag(0, I, -I)
    assert a[3] == E(1, 2) - E(2, 1)
    assert a[4] == (E(1, 2) + E(2, 1)).scale(I)
    assert a[5] == E(1, 3) + E(3, 1)
    assert a[6] == (E(1, 3) - E(3, 1)).scale(I)
    assert a[7] == E(2, 3) + E(3, 2)
    assert a[8] == (E(2, 3) - E(3, 2)).scale(I)


def test_chevalley_entries():
    assert (H_ALPHA, H_BETA) == (Matrix3.diag(1, -1, 0), Matrix3.diag(0, 1, -1))
    assert (X_ALPHA, X_BETA, X_ALPHA_BETA) == (E(1, 2), E(2, 3), -E(1, 3))
    assert (Y_ALPHA, Y_ALPHA_BETA) == (E(2, 1), -E(3, 1))


@pytest.mark.parametrize("k", range(1, 9))
def test_a_basis_in_su21(k):
    assert tau_alg(a[k]) == a[k]
    assert a[k].trace() == ZERO
    assert in_su21_algebra(a[k])


def test_jacobi_exhaustive():
    for x, y, z in itertools.product(A_BASIS, repeat=3):
        s = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y))
        assert s.is_zero()


def test_bracket_examples():
    assert bracket(a[1], a[1]).is_zero()
    assert bracket(a[1], a[3]) == a[4].scale(2)
    assert bracket(X_ALPHA, X_BETA) == -X_ALPHA_BETA


def test_tau_examples():
    assert tau_alg(X_ALPHA) == -Y_ALPHA
    h = H_ALPHA + H_BETA.scale(2)
    assert tau_alg(h) == -h
    assert tau_grp(IDENTITY) == IDENTITY
    d = Matrix3.diag(-1, -1, 1)
    assert tau_grp(d) == d
    g0 = matrix("rot13")
    assert tau_grp(g0) == g0.inverse()


def test_membership_examples():
    assert in_su21_algebra(a[5])
    assert not in_su21_algebra(X_ALPHA)
    assert not in_su21_algebra(a[1].scale(I))
    assert in_su21_group(IDENTITY)
    assert in_su21_group(matrix("c_v4"))
    assert not in_su21_group(Matrix3.diag(2, 1, "1/2"))


@pytest.mark.parametrize("x, y", list(itertools.product(range(1, 9), repeat=2)))
def test_tau_is_automorphism(x, y):
    assert tau_alg(bracket(a[x], a[y])) == bracket(tau_alg(a[x]), tau_alg(a[y]))


@given(st.sampled_from(INVERTIBLE_WITNESSES), st.sampled_from(INVERTIBLE_WITNESSES))
def test_tau_grp_involutive_homomorphism(g, h):
    assert tau_grp(tau_grp(g)) == g
    assert tau_grp(g @ h) == tau_grp(g) @ tau_grp(h)


@pytest.mark.parametrize("name", sorted(n for n, m in MATRICES.items() if m.det()))
def test_tau_compatibility(name):
    g = matrix(name)
    gi, tg = g.inverse(), tau_grp(g)
    tgi = tg.inverse()
    for x in A_BASIS:
        assert tau_alg(g @ x @ gi) == tg @ tau_alg(x) @ tgi


@given(elements(), elements())
def test_bracket_antisymmetric(s, t):
    x = a[1].scale(s) + a[3] + X_BETA.scale(t)
    y = a[6] + Y_ALPHA.scale(s)
    assert bracket(x, y) == -bracket(y, x)


def test_bases_span_sl3():
    assert rank([chevalley_coords(x) for x in A_BASIS]) == 8
    assert rank([a_coords(x) for x in CHEVALLEY]) == 8


@given(st.lists(elements(), min_size=8, max_size=8))
def test_coordinate_round_trips(c):
    assert a_coords(from_a_coords(c)) == tuple(c)
    assert chevalley_coords(from_chevalley_coords(c)) == tuple(c)


@given(st.lists(real_elements(), min_size=8, max_size=8))
def test_real_a_combinations_are_in_su21(c):
    assert in_su21_algebra(from_a_coords(c))


def test_conjugate_subalgebra_examples():
    u = span_of([X_ALPHA], "complex")
    assert span_equal(conjugate_subalgebra(IDENTITY, u), u)
    q = fe("1/4")
    x = from_a_coords([q * I, 2 * q * I, 0, q * I, 0, -q * SQRT2 * I, 0, -q * SQRT2 * I])
    assert span_equal(conjugate_subalgebra(matrix("g_xa"), u), span_of([x], "complex"))
    v = span_of([X_ALPHA + X_BETA], "complex")
    target = span_of([a[3] + a[4] + a[7] - a[8]], "complex")
    assert span_equal(conjugate_subalgebra(matrix("g_reg"), v), target)
    with pytest.raises(Singular):
        conjugate_subalgebra(Matrix3.diag(1, 0, 1), u)


def test_span_equal_examples():
    assert span_equal(span_of([a[1]]), span_of([a[1].scale(-2)]))
    assert not span_equal(span_of([a[1]]), span_of([a[2]]))
    x = X_ALPHA
    lhs = span_of([x, tau_alg(x)], "complex")
    rhs = span_of([x + tau_alg(x), (x - tau_alg(x)).scale(I)], "complex")
    assert span_equal(lhs, rhs)
    assert span_equal(real_form(lhs), span_of([x + tau_alg(x), (x - tau_alg(x)).scale(I)]))
    with pytest.raises(DomainMismatch):
        span_equal(lhs, span_of([a[1]]))


def test_real_span_distinguishes_real_multiples():
    assert not span_equal(span_of([a[1]]), span_of([a[1], a[1].scale(I)]))
    assert span_of([a[1], a[1].scale(I)]).dim == 2
    assert span_of([a[1], a[1].scale(I)], "complex").dim == 1


def test_closure_examples():
    assert is_closed(span_of([a[1], a[2]]))[0]
    ok, bad = is_closed(span_of([a[1], a[3]]))
    assert not ok and bad == [(0, 1)]
    assert is_closed(span_of(A_BASIS))[0]


def test_realness_examples():
    assert not is_real_span(span_of([X_ALPHA], "complex"))
    assert is_real_span(span_of([X_ALPHA_BETA, Y_ALPHA_BETA, H_ALPHA + H_BETA], "complex"))
    for lam in (fe(-3), fe("1/3"), SQRT2):
        assert is_real_span(span_of([a[1] + a[2].scale(lam)]))


def test_traceless_required():
    with pytest.raises(ValueError):
        span_of([IDENTITY])
