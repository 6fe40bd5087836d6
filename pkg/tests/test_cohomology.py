import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from su21.catalog import FAMILIES, MATRICES, load_catalog, matrix, product
from su21.catalog.witnesses import NEGATIVE_CONTROL, PRINTED_CIRCLE2
from su21.cohomology import (
    TorusSigmaType,
    apply_sigma,
    check_coboundary,
    check_family_conjugator,
    check_family_multiplicative,
    check_family_tau_action,
    check_stabilizer_membership,
    check_transform_involution,
    default_pairs,
    default_samples,
    is_cocycle,
    is_torus_cocycle,
    sl3_class,
    torus_class,
)
from su21.errors import NotACocycle, NotInSL3, SingularSample
from su21.field import I, ONE, SQRT2, fe
from su21.linalg import IDENTITY, Matrix3
from su21.liealg import X_ALPHA, span_of, tau_grp

from conftest import elements, real_elements

FIX, INV, SWAP_INV = TorusSigmaType.FIX, TorusSigmaType.INV, TorusSigmaType.SWAP_INV
MINUS = Matrix3.diag(-1, -1, 1)


def test_torus_inv_classes():
    assert torus_class(1, INV).trivial
    assert not torus_class(-1, INV).trivial
    assert torus_class(fe(3) - fe(2) * SQRT2, INV).trivial
    with pytest.raises(NotACocycle):
        torus_class(I, INV)


def test_torus_fix_and_swap_inv_trivial():
    assert torus_class((I,), FIX).trivial
    assert torus_class((fe(2), fe(2)), SWAP_INV).trivial
    assert torus_class((ONE + I, ONE - I), SWAP_INV).trivial


def test_componentwise_inv_has_four_classes():
    kind = TorusSigmaType.COMPONENTWISE_INV
    labels = {torus_class((fe(s), fe(t)), kind).representative for s in (1, -1) for t in (1, -1)}
    assert len(labels) == 4


@given(real_elements(nonzero=True), st.sampled_from([1, -1]))
def test_torus_class_constant_on_real_squares(h, sign):
    z = fe(sign)
    assert torus_class(h * h * z, INV) == torus_class(z, INV)


@given(elements(nonzero=True), st.sampled_from([1, -1]))
def test_torus_class_constant_on_complex_equivalence(h, sign):
    z = fe(sign)
    assert torus_class(h * h.conjugate() * z, INV) == torus_class(z, INV)


def test_sl3_class_examples():
    assert is_cocycle(IDENTITY) and is_cocycle(MINUS) and is_cocycle(matrix("h_xa"))
    assert sl3_class(IDENTITY) == "trivial"
    assert sl3_class(MINUS) == "nontrivial"
    assert sl3_class(matrix("h_xa")) == "trivial"
    with pytest.raises(NotInSL3):
        is_cocycle(Matrix3.diag(2, 1, 1))
    with pytest.raises(NotACocycle):
        sl3_class(Matrix3.diag(I, -I, 1))


def test_coboundary_examples():
    assert check_coboundary(IDENTITY, IDENTITY)
    assert check_coboundary(matrix("g_xa"), matrix("h_xa"))
    assert check_coboundary(matrix("g3"), matrix("swap12"))
    assert check_coboundary(matrix("g1"), matrix("T(-1,1)"))
    assert check_coboundary(matrix("g2"), matrix("T(1,-1)"))
    assert not check_coboundary(IDENTITY, MINUS)


def test_every_catalogued_coboundary_is_trivial():
    seen = 0
    for case in load_catalog():
        for p in case.real_points:
            g, c = product(p.conjugator), matrix(p.cocycle)
            assert check_coboundary(g, c), (case.id, p.target)
            assert sl3_class(c) == "trivial"
            seen += 1
    assert seen >= 20


@st.composite
def sl3_elements(draw):
    """Products of elementary matrices and a diagonal torus element."""
    g = IDENTITY
    for _ in range(draw(st.integers(1, 4))):
        i, j = draw(st.sampled_from([(i, j) for i in range(1, 4) for j in range(1, 4) if i != j]))
        g = g @ (IDENTITY + Matrix3.unit(i, j).scale(draw(elements())))
    s, t = draw(elements(nonzero=True)), draw(elements(nonzero=True))
    return g @ Matrix3.diag(s, t, (s * t).inverse())


@settings(max_examples=30)
@given(sl3_elements())
def test_random_coboundaries_are_trivial(g):
    c = g.inverse() @ tau_grp(g)
    assert is_cocycle(c)
    assert sl3_class(c) == "trivial"


@settings(max_examples=30)
@given(sl3_elements())
def test_twisted_minus_stays_nontrivial(g):
    c = g.inverse() @ MINUS @ tau_grp(g)
    assert is_cocycle(c)
    assert sl3_class(c) == "nontrivial"


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_family_tau_action_and_negative_control(name):
    fam = FAMILIES[name]
    samples = default_samples(fam.arity)
    assert len(samples) >= 5
    assert check_family_tau_action(fam, samples)
    assert not check_family_tau_action(fam, samples, NEGATIVE_CONTROL[fam.claimed])


@pytest.mark.parametrize("name", sorted(FAMILIES))
def test_family_multiplicative_and_conjugator(name):
    fam = FAMILIES[name]
    assert check_family_multiplicative(fam, default_pairs(fam.arity))
    assert check_family_conjugator(fam, matrix(fam.conjugator), default_samples(fam.arity))
    assert check_transform_involution(fam.claimed, default_samples(fam.arity))


def test_fixed_family_with_listed_samples():
    fam = FAMILIES["fam_reg"]
    samples = [(fe(x),) for x in (1, 2)] + [(I,), (ONE + I,), (SQRT2,)]
    assert check_family_tau_action(fam, samples)
    assert check_family_tau_action(FAMILIES["fam_xh"], samples)
    assert not check_family_tau_action(fam, [(fe(2),)], INV)


def test_printed_twisted_family_is_not_a_torus():
    samples = default_samples(2)
    assert not check_family_conjugator(PRINTED_CIRCLE2, matrix("g3"), samples)


def test_family_rejects_zero():
    with pytest.raises(SingularSample):
        FAMILIES["fam_reg"]((fe(0),))
    with pytest.raises(SingularSample):
        apply_sigma(INV, (0,))


@given(elements(nonzero=True), elements(nonzero=True))
def test_sigma_transforms_are_involutions(s, t):
    for kind in TorusSigmaType:
        p = (s,) if kind.arity == 1 else (s, t)
        assert apply_sigma(kind, apply_sigma(kind, p)) == p


def test_torus_cocycle_condition():
    assert is_torus_cocycle((fe(2), fe(2)), SWAP_INV)
    assert not is_torus_cocycle((fe(2), fe("1/2")), SWAP_INV)


def test_stabilizer_membership_example():
    g = Matrix3([[2, 0, 0], [0, 1, 0], [0, 0, "1/2"]])
    u = span_of([X_ALPHA], "complex")
    assert check_stabilizer_membership(g, u)
    assert not check_stabilizer_membership(matrix("rot13"), u)
