from fractions import Fraction

import pytest
from hypothesis import settings
from hypothesis import strategies as st

from hypmesh import Poly

settings.register_profile("default", deadline=None, max_examples=100)
settings.load_profile("default")


def P(*coeffs, formal_degree=None):
    return Poly(coeffs, formal_degree)


def R(*roots, lc=1):
    return Poly.from_roots(roots, lc)


rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)
nonzero_rationals = rationals.filter(lambda q: q != 0)


@st.composite
def polys(draw, min_degree=0, max_degree=6):
    cs = draw(st.lists(rationals, min_size=min_degree + 1, max_size=max_degree + 1))
    return Poly(cs)


@st.composite
def rooted_polys(draw, min_degree=1, max_degree=6, distinct=False):
    roots = draw(
        st.lists(rationals, min_size=min_degree, max_size=max_degree, unique=distinct)
    )
    lc = draw(nonzero_rationals)
    return Poly.from_roots(roots, lc)


@pytest.fixture
def F():
    return Fraction
