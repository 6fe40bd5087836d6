from fractions import Fraction

from hypothesis import settings
from hypothesis import strategies as st

from su21.field import FieldElement

settings.register_profile("default", max_examples=60, deadline=None)
settings.load_profile("default")

small = st.fractions(min_value=-6, max_value=6, max_denominator=7)


@st.composite
def elements(draw, nonzero=False):
    c = [draw(small) for _ in range(4)]
    x = FieldElement(*c)
    if nonzero and not x:
        x = FieldElement(Fraction(1) + c[0])
        if not x:
            x = FieldElement(1)
    return x


@st.composite
def real_elements(draw, nonzero=False):
    """a + b sqrt2 with rational a, b."""
    a, b = draw(small), draw(small)
    x = FieldElement(a, b, 0, -b)
    if nonzero and not x:
        x = FieldElement(1)
    return x


@st.composite
def matrices(draw):
    from su21.linalg import Matrix3

    return Matrix3([[draw(elements()) for _ in range(3)] for _ in range(3)])


def approx(x) -> complex:
    """Floating-point image of a field element under zeta -> exp(i pi / 4)."""
    import cmath

    z = cmath.exp(1j * cmath.pi / 4)
    return sum(float(c) * z**k for k, c in enumerate(x.coeffs))


def approx_matrix(m):
    import numpy as np

    return np.array([[approx(m[i, j]) for j in range(3)] for i in range(3)])
